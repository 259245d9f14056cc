#include "eulerian/poset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "eulerian/errors.hpp"

namespace eulerian {

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BitMatrix::row_count(std::size_t i) const noexcept {
  std::size_t total = 0;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(r[w]));
  return total;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("BitMatrix product: dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = out.row(i);
    for_each_in_row(i, [&](std::size_t j) {
      const std::uint64_t* src = rhs.row(j);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] |= src[w];
    });
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) for_each_in_row(i, [&](std::size_t j) { out.set(j, i); });
  return out;
}

// ---------------------------------------------------------------------------
// RankedPoset

RankedPoset::RankedPoset(int rank, std::vector<std::size_t> level_sizes,
                         std::vector<CoverList> covers)
    : rank_(rank), level_sizes_(std::move(level_sizes)), covers_(std::move(covers)) {
  for (auto& list : covers_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t RankedPoset::element_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t s : level_sizes_) total += s;
  return total;
}

std::vector<std::string> validate(const RankedPoset& p) {
  std::vector<std::string> diags;
  const int rank = p.rank();
  if (rank < 1) {
    diags.push_back("rank " + std::to_string(rank) + " is below 1");
    return diags;
  }
  const auto& sizes = p.level_sizes();
  if (sizes.size() != static_cast<std::size_t>(rank) + 1) {
    diags.push_back("level_sizes has " + std::to_string(sizes.size()) + " entries, expected " +
                    std::to_string(rank + 1));
    return diags;
  }
  if (p.all_covers().size() != static_cast<std::size_t>(rank)) {
    diags.push_back("covers has " + std::to_string(p.all_covers().size()) +
                    " levels, expected " + std::to_string(rank));
    return diags;
  }
  if (sizes.front() != 1) diags.push_back("no unique bottom: level 0 has " + std::to_string(sizes.front()) + " elements");
  if (sizes.back() != 1) diags.push_back("no unique top: level " + std::to_string(rank) + " has " + std::to_string(sizes.back()) + " elements");
  for (int r = 1; r < rank; ++r) {
    if (sizes[static_cast<std::size_t>(r)] == 0) diags.push_back("empty level at rank " + std::to_string(r));
  }

  std::vector<std::vector<bool>> has_up(sizes.size()), has_down(sizes.size());
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    has_up[r].assign(sizes[r], false);
    has_down[r].assign(sizes[r], false);
  }
  for (int r = 0; r < rank; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    for (const Cover& c : p.covers(r)) {
      if (c.lower >= sizes[ur] || c.upper >= sizes[ur + 1]) {
        diags.push_back("cover (" + std::to_string(c.lower) + "," + std::to_string(c.upper) +
                        ") between ranks " + std::to_string(r) + " and " + std::to_string(r + 1) +
                        " references a missing element");
        continue;
      }
      has_up[ur][c.lower] = true;
      has_down[ur + 1][c.upper] = true;
    }
  }
  for (int r = 0; r <= rank; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    for (std::size_t i = 0; i < sizes[ur]; ++i) {
      if (r < rank && !has_up[ur][i]) {
        diags.push_back("dangling element " + std::to_string(i) + " at rank " + std::to_string(r) +
                        ": no upper cover");
      }
      if (r > 0 && !has_down[ur][i]) {
        diags.push_back("dangling element " + std::to_string(i) + " at rank " + std::to_string(r) +
                        ": no lower cover");
      }
    }
  }
  return diags;
}

void require_valid(const RankedPoset& p) {
  const auto diags = validate(p);
  if (!diags.empty()) throw InvalidArgument("invalid poset: " + diags.front());
}

namespace {
std::atomic<std::size_t> g_element_budget{kDefaultElementBudget};

void check_budget(std::size_t elements) {
  if (elements > element_budget()) {
    throw ResourceLimit("construction needs " + std::to_string(elements) +
                        " elements, budget is " + std::to_string(element_budget()));
  }
}
}  // namespace

std::size_t element_budget() noexcept { return g_element_budget.load(std::memory_order_relaxed); }
void set_element_budget(std::size_t max_elements) noexcept {
  g_element_budget.store(max_elements, std::memory_order_relaxed);
}

RankedPoset chain(int rank) {
  if (rank < 1) throw InvalidArgument("chain rank must be at least 1, got " + std::to_string(rank));
  check_budget(static_cast<std::size_t>(rank) + 1);
  std::vector<CoverList> covers(static_cast<std::size_t>(rank), CoverList{Cover{0, 0}});
  return RankedPoset(rank, std::vector<std::size_t>(static_cast<std::size_t>(rank) + 1, 1), std::move(covers));
}

RankedPoset boolean(int k) {
  if (k < 1) throw InvalidArgument("boolean algebra needs k >= 1, got " + std::to_string(k));
  if (k >= 63) throw ResourceLimit("boolean algebra of rank " + std::to_string(k) + " is too large");
  check_budget(std::size_t{1} << k);

  const std::uint64_t total = std::uint64_t{1} << k;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k) + 1, 0);
  std::vector<std::uint32_t> index(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    auto& level = sizes[static_cast<std::size_t>(std::popcount(m))];
    index[m] = static_cast<std::uint32_t>(level++);
  }
  std::vector<CoverList> covers(static_cast<std::size_t>(k));
  for (std::uint64_t m = 0; m < total; ++m) {
    for (int b = 0; b < k; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if (m & bit) continue;
      covers[static_cast<std::size_t>(std::popcount(m))].push_back(Cover{index[m], index[m | bit]});
    }
  }
  return RankedPoset(k, std::move(sizes), std::move(covers));
}

RankedPoset dual(const RankedPoset& p) {
  require_valid(p);
  const int rank = p.rank();
  std::vector<std::size_t> sizes(p.level_sizes().rbegin(), p.level_sizes().rend());
  std::vector<CoverList> covers(static_cast<std::size_t>(rank));
  for (int r = 0; r < rank; ++r) {
    // Dual level r sits between original ranks rank-r-1 (above) and rank-r.
    for (const Cover& c : p.covers(rank - r - 1)) {
      covers[static_cast<std::size_t>(r)].push_back(Cover{c.upper, c.lower});
    }
  }
  return RankedPoset(rank, std::move(sizes), std::move(covers));
}

// ---------------------------------------------------------------------------
// Reachability

std::size_t Reachability::slot(int r1, int r2) const {
  if (r1 < 0 || r2 > rank_ || r1 > r2) {
    throw InvalidArgument("rank pair (" + std::to_string(r1) + "," + std::to_string(r2) +
                          ") outside 0 <= r1 <= r2 <= " + std::to_string(rank_));
  }
  const auto a = static_cast<std::size_t>(r1);
  const auto b = static_cast<std::size_t>(r2);
  const auto n = static_cast<std::size_t>(rank_) + 1;
  // Row-major upper triangle including the diagonal.
  return a * n - (a * (a - 1)) / 2 + (b - a);
}

Reachability::Reachability(const RankedPoset& p) : rank_(p.rank()) {
  require_valid(p);
  const auto n = static_cast<std::size_t>(rank_) + 1;
  up_.resize(n * (n + 1) / 2);
  down_.resize(up_.size());

  std::vector<BitMatrix> cover_bits;
  cover_bits.reserve(static_cast<std::size_t>(rank_));
  for (int r = 0; r < rank_; ++r) {
    BitMatrix m(p.level_size(r), p.level_size(r + 1));
    for (const Cover& c : p.covers(r)) m.set(c.lower, c.upper);
    cover_bits.push_back(std::move(m));
  }

  for (int r1 = 0; r1 <= rank_; ++r1) {
    up_[slot(r1, r1)] = BitMatrix::identity(p.level_size(r1));
    for (int r2 = r1 + 1; r2 <= rank_; ++r2) {
      up_[slot(r1, r2)] = up_[slot(r1, r2 - 1)] * cover_bits[static_cast<std::size_t>(r2 - 1)];
    }
  }
  for (int r1 = 0; r1 <= rank_; ++r1) {
    for (int r2 = r1; r2 <= rank_; ++r2) down_[slot(r1, r2)] = up_[slot(r1, r2)].transposed();
  }
}

const BitMatrix& Reachability::up(int r1, int r2) const { return up_[slot(r1, r2)]; }
const BitMatrix& Reachability::down(int r2, int r1) const { return down_[slot(r1, r2)]; }

BitMatrix comparability(const RankedPoset& p, int r1, int r2) {
  require_valid(p);
  if (r1 < 0 || r2 > p.rank() || r1 > r2) {
    throw InvalidArgument("comparability needs 0 <= r1 <= r2 <= " + std::to_string(p.rank()));
  }
  BitMatrix m = BitMatrix::identity(p.level_size(r1));
  for (int r = r1; r < r2; ++r) {
    BitMatrix step(p.level_size(r), p.level_size(r + 1));
    for (const Cover& c : p.covers(r)) step.set(c.lower, c.upper);
    m = m * step;
  }
  return m;
}

BigInt count_maximal_chains(const RankedPoset& p) {
  require_valid(p);
  std::vector<BigInt> ways{BigInt(1)};
  for (int r = 0; r < p.rank(); ++r) {
    std::vector<BigInt> next(p.level_size(r + 1));
    for (const Cover& c : p.covers(r)) next[c.upper] += ways[c.lower];
    ways = std::move(next);
  }
  return ways.front();
}

EulerianReport is_eulerian(const RankedPoset& p) { return is_eulerian(p, Reachability(p)); }

EulerianReport is_eulerian(const RankedPoset& p, const Reachability& reach) {
  const int rank = p.rank();
  for (int r1 = 0; r1 < rank; ++r1) {
    for (int r2 = r1 + 1; r2 <= rank; ++r2) {
      const BitMatrix& span = reach.up(r1, r2);
      for (std::size_t x = 0; x < p.level_size(r1); ++x) {
        std::optional<EulerianViolation> bad;
        span.for_each_in_row(x, [&](std::size_t y) {
          if (bad) return;
          std::size_t counts[2] = {0, 0};
          counts[r1 % 2] += 1;
          counts[r2 % 2] += 1;
          for (int r = r1 + 1; r < r2; ++r) {
            const BitMatrix& above_x = reach.up(r1, r);
            const BitMatrix& below_y = reach.down(r2, r);
            const std::uint64_t* a = above_x.row(x);
            const std::uint64_t* b = below_y.row(y);
            std::size_t between = 0;
            for (std::size_t w = 0; w < above_x.words_per_row(); ++w) {
              between += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
            }
            counts[r % 2] += between;
          }
          if (counts[0] != counts[1]) {
            bad = EulerianViolation{r1, x, r2, y, counts[0], counts[1]};
          }
        });
        if (bad) return EulerianReport{false, bad};
      }
    }
  }
  return EulerianReport{true, std::nullopt};
}

}  // namespace eulerian
