#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/numeric.hpp"

namespace eulerian {

/// Dense 0/1 matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const std::uint64_t* row(std::size_t i) const noexcept { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) noexcept { return bits_.data() + i * words_; }
  std::size_t row_count(std::size_t i) const noexcept;

  /// Boolean product: (A*B)(i,k) = OR_j A(i,j) & B(j,k).
  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix transposed() const;

  template <typename F>
  void for_each_in_row(std::size_t i, F&& f) const {
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Cover relation between consecutive ranks: element `lower` of rank r is
/// covered by element `upper` of rank r + 1 (indices within their levels).
struct Cover {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

using CoverList = std::vector<Cover>;

/// Bounded graded poset stored as rank levels plus cover relations between
/// consecutive levels. Elements are identified by (rank, index in level).
///
/// Construction only canonicalizes (sorts and deduplicates covers); use
/// validate() to check the structural invariants. Every algorithm in the
/// library expects a valid poset and calls require_valid() on entry.
class RankedPoset {
 public:
  RankedPoset() = default;
  RankedPoset(int rank, std::vector<std::size_t> level_sizes, std::vector<CoverList> covers);

  /// Rank of 1̂. Proper ranks are 1..rank()-1.
  int rank() const noexcept { return rank_; }
  /// Number of proper ranks, the n of a rank n+1 poset.
  int proper_ranks() const noexcept { return rank_ - 1; }
  const std::vector<std::size_t>& level_sizes() const noexcept { return level_sizes_; }
  std::size_t level_size(int r) const { return level_sizes_.at(static_cast<std::size_t>(r)); }
  /// Covers between rank r and r + 1, sorted lexicographically.
  const CoverList& covers(int r) const { return covers_.at(static_cast<std::size_t>(r)); }
  const std::vector<CoverList>& all_covers() const noexcept { return covers_; }
  std::size_t element_count() const noexcept;

  friend bool operator==(const RankedPoset&, const RankedPoset&) = default;

 private:
  int rank_ = 0;
  std::vector<std::size_t> level_sizes_;
  std::vector<CoverList> covers_;
};

/// Human-readable list of violated invariants; empty means valid.
std::vector<std::string> validate(const RankedPoset& p);
/// Throws InvalidArgument carrying the first diagnostic.
void require_valid(const RankedPoset& p);

/// Process-wide cap on the number of elements a construction may produce.
std::size_t element_budget() noexcept;
void set_element_budget(std::size_t max_elements) noexcept;
inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

RankedPoset chain(int rank);
/// Subset lattice of a k-element set. Level r lists the r-subsets in
/// increasing bitmask order.
RankedPoset boolean(int k);
RankedPoset dual(const RankedPoset& p);

/// Comparability between every pair of levels, computed once by propagating
/// cover relations upward. Immutable after construction.
class Reachability {
 public:
  explicit Reachability(const RankedPoset& p);

  int rank() const noexcept { return rank_; }
  /// (i, j) set iff element i of rank r1 <= element j of rank r2; r1 <= r2.
  const BitMatrix& up(int r1, int r2) const;
  /// Transpose of up(r1, r2): (j, i) set iff element i of rank r1 <= j of rank r2.
  const BitMatrix& down(int r2, int r1) const;

 private:
  std::size_t slot(int r1, int r2) const;
  int rank_ = 0;
  std::vector<BitMatrix> up_;
  std::vector<BitMatrix> down_;
};

BitMatrix comparability(const RankedPoset& p, int r1, int r2);

BigInt count_maximal_chains(const RankedPoset& p);

struct EulerianViolation {
  int lower_rank = 0;
  std::size_t lower_index = 0;
  int upper_rank = 0;
  std::size_t upper_index = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
};

struct EulerianReport {
  bool eulerian = true;
  std::optional<EulerianViolation> violation;
  explicit operator bool() const noexcept { return eulerian; }
};

/// Exhaustive check that every interval [x, y] with x < y holds equally many
/// elements of even and odd rank. Reports the first violation in
/// (lower rank, upper rank, lower index, upper index) order.
EulerianReport is_eulerian(const RankedPoset& p);
EulerianReport is_eulerian(const RankedPoset& p, const Reachability& reach);

}  // namespace eulerian
