#include "eulerian/subset.hpp"

#include <algorithm>

namespace eulerian {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxSubsetRank) {
    throw InvalidArgument("rank subset ambient size " + std::to_string(n) +
                          " outside [0, " + std::to_string(kMaxSubsetRank) + "]");
  }
}

}  // namespace

RankSubset::RankSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_n(n);
  if ((mask & ~full_mask(n)) != 0) {
    throw InvalidArgument("rank subset has members outside [1, " + std::to_string(n) + "]");
  }
}

RankSubset::RankSubset(int n, std::initializer_list<int> members)
    : RankSubset(from_members(n, std::vector<int>(members))) {}

RankSubset RankSubset::from_members(int n, const std::vector<int>& members) {
  check_n(n);
  std::uint64_t mask = 0;
  for (int s : members) {
    if (s < 1 || s > n) {
      throw InvalidArgument("rank " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
    }
    mask |= std::uint64_t{1} << (s - 1);
  }
  return {n, mask};
}

RankSubset RankSubset::interval(int n, int lo, int hi) {
  check_n(n);
  if (lo > hi) return {n, 0};
  if (lo < 1 || hi > n) {
    throw InvalidArgument("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                          "] outside [1, " + std::to_string(n) + "]");
  }
  return {n, full_mask(hi) & ~full_mask(lo - 1)};
}

std::vector<int> RankSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<std::pair<int, int>> RankSubset::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int s : members()) {
    if (!out.empty() && out.back().second == s - 1) {
      out.back().second = s;
    } else {
      out.emplace_back(s, s);
    }
  }
  return out;
}

RankSubset RankSubset::complement() const { return {n_, full_mask(n_) & ~mask_}; }

RankSubset RankSubset::reversed() const {
  std::uint64_t out = 0;
  for (int s : members()) out |= std::uint64_t{1} << (n_ - s);
  return {n_, out};
}

std::string RankSubset::to_string() const {
  std::string out = "[";
  bool first = true;
  for (int s : members()) {
    if (!first) out += ',';
    out += std::to_string(s);
    first = false;
  }
  return out + "]";
}

bool is_even_mask(std::uint64_t mask) {
  while (mask != 0) {
    mask >>= std::countr_zero(mask);
    const int run = std::countr_one(mask);
    if (run % 2 != 0) return false;
    mask = run >= 64 ? 0 : mask >> run;
  }
  return true;
}

bool evenly_contains_mask(std::uint64_t s, std::uint64_t q) {
  return (s & ~q) == 0 && is_even_mask(s) && is_even_mask(q) && is_even_mask(q & ~s);
}

}  // namespace eulerian
