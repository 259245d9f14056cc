#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "eulerian/errors.hpp"

namespace eulerian {

/// Largest ambient rank count a RankSubset can address.
inline constexpr int kMaxSubsetRank = 62;

/// A subset of [1, n], stored as a bitmask where bit (s - 1) marks member s.
class RankSubset {
 public:
  RankSubset() = default;
  RankSubset(int n, std::uint64_t mask);
  RankSubset(int n, std::initializer_list<int> members);
  static RankSubset from_members(int n, const std::vector<int>& members);
  static RankSubset interval(int n, int lo, int hi);
  static RankSubset full(int n) { return interval(n, 1, n); }

  int n() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int s) const noexcept {
    return s >= 1 && s <= n_ && ((mask_ >> (s - 1)) & 1U);
  }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool is_subset_of(const RankSubset& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<int> members() const;
  /// Maximal runs of consecutive members, as closed intervals (lo, hi).
  std::vector<std::pair<int, int>> runs() const;

  RankSubset complement() const;
  /// {n + 1 - s : s in this}
  RankSubset reversed() const;

  RankSubset operator|(const RankSubset& o) const { return {n_, mask_ | o.mask_}; }
  RankSubset operator&(const RankSubset& o) const { return {n_, mask_ & o.mask_}; }
  RankSubset operator-(const RankSubset& o) const { return {n_, mask_ & ~o.mask_}; }

  /// "[1,2,5]"; the empty set is "[]".
  std::string to_string() const;

  friend bool operator==(const RankSubset&, const RankSubset&) = default;
  friend auto operator<=>(const RankSubset& a, const RankSubset& b) = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Every maximal run of consecutive members has even length.
bool is_even_mask(std::uint64_t mask);
inline bool is_even_set(const RankSubset& q) { return is_even_mask(q.mask()); }

/// S, Q and Q \ S are even sets and S is a subset of Q.
bool evenly_contains_mask(std::uint64_t s, std::uint64_t q);
inline bool evenly_contains(const RankSubset& s, const RankSubset& q) {
  return evenly_contains_mask(s.mask(), q.mask());
}

}  // namespace eulerian
