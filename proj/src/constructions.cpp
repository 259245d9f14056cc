#include "eulerian/constructions.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "eulerian/errors.hpp"

namespace eulerian {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceLimit(std::string(what) + " overflows");
  return out;
}

void check_elements(const std::vector<std::size_t>& sizes) {
  std::uint64_t total = 0;
  for (std::size_t s : sizes) {
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceLimit("level of " + std::to_string(s) + " elements exceeds index range");
    }
    if (__builtin_add_overflow(total, s, &total)) throw ResourceLimit("element count overflows");
  }
  if (total > element_budget()) {
    throw ResourceLimit("construction needs " + std::to_string(total) + " elements, budget is " +
                        std::to_string(element_budget()));
  }
}

std::string interval_name(const RankInterval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

}  // namespace

std::vector<std::string> validate_even_interval_system(const IntervalSystem& sys) {
  std::vector<std::string> diags;
  const auto& ivs = sys.intervals;
  for (const auto& iv : ivs) {
    if (iv.lo < 1 || iv.hi > sys.n || iv.lo > iv.hi) {
      diags.push_back("interval " + interval_name(iv) + " is not a subinterval of [1," +
                      std::to_string(sys.n) + "]");
    } else if (iv.size() % 2 != 0) {
      diags.push_back("interval " + interval_name(iv) + " has odd cardinality");
    }
  }
  if (!diags.empty()) return diags;
  for (std::size_t a = 0; a < ivs.size(); ++a) {
    for (std::size_t b = a + 1; b < ivs.size(); ++b) {
      const auto& x = ivs[a];
      const auto& y = ivs[b];
      if ((x.lo <= y.lo && y.hi <= x.hi) || (y.lo <= x.lo && x.hi <= y.hi)) {
        diags.push_back("containment between " + interval_name(x) + " and " + interval_name(y));
        continue;
      }
      const int overlap = std::max(0, std::min(x.hi, y.hi) - std::max(x.lo, y.lo) + 1);
      if (overlap % 2 != 0) {
        diags.push_back("intersection of " + interval_name(x) + " and " + interval_name(y) +
                        " has odd cardinality");
      }
    }
  }
  return diags;
}

RankedPoset replicate_interval(const RankedPoset& p, int lo, int hi, std::uint64_t copies) {
  require_valid(p);
  if (lo < 1 || hi > p.rank() - 1 || lo > hi) {
    throw InvalidArgument("replication interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                          "] outside [1," + std::to_string(p.rank() - 1) + "]");
  }
  if (copies < 1) throw InvalidArgument("replication needs at least one copy");

  std::vector<std::size_t> sizes = p.level_sizes();
  for (int r = lo; r <= hi; ++r) {
    auto& s = sizes[static_cast<std::size_t>(r)];
    s = checked_mul(s, copies, "replicated level size");
  }
  check_elements(sizes);

  std::vector<CoverList> covers(static_cast<std::size_t>(p.rank()));
  for (int r = 0; r < p.rank(); ++r) {
    const bool lower_in = r >= lo && r <= hi;
    const bool upper_in = r + 1 >= lo && r + 1 <= hi;
    const auto lower_size = static_cast<std::uint32_t>(p.level_size(r));
    const auto upper_size = static_cast<std::uint32_t>(p.level_size(r + 1));
    auto& out = covers[static_cast<std::size_t>(r)];
    const CoverList& in = p.covers(r);
    if (!lower_in && !upper_in) {
      out = in;
      continue;
    }
    out.reserve(in.size() * copies);
    for (std::uint64_t c = 0; c < copies; ++c) {
      const auto cc = static_cast<std::uint32_t>(c);
      for (const Cover& e : in) {
        out.push_back(Cover{lower_in ? cc * lower_size + e.lower : e.lower,
                            upper_in ? cc * upper_size + e.upper : e.upper});
      }
    }
  }
  return RankedPoset(p.rank(), std::move(sizes), std::move(covers));
}

RankedPoset horizontal_double(const RankedPoset& p) {
  require_valid(p);
  RankedPoset out = p;
  for (int i = 1; i < p.rank(); ++i) out = replicate_interval(out, i, i, 2);
  return out;
}

RankedPoset join(const RankedPoset& p, const RankedPoset& q) {
  require_valid(p);
  require_valid(q);
  const int rank = p.rank() + q.rank() - 1;
  std::vector<std::size_t> sizes(p.level_sizes().begin(), p.level_sizes().end() - 1);
  sizes.insert(sizes.end(), q.level_sizes().begin() + 1, q.level_sizes().end());
  check_elements(sizes);

  std::vector<CoverList> covers;
  covers.reserve(static_cast<std::size_t>(rank));
  for (int r = 0; r + 1 < p.rank(); ++r) covers.push_back(p.covers(r));
  CoverList bridge;
  const auto coatoms = static_cast<std::uint32_t>(p.level_size(p.rank() - 1));
  const auto atoms = static_cast<std::uint32_t>(q.level_size(1));
  bridge.reserve(std::size_t{coatoms} * atoms);
  for (std::uint32_t i = 0; i < coatoms; ++i) {
    for (std::uint32_t j = 0; j < atoms; ++j) bridge.push_back(Cover{i, j});
  }
  covers.push_back(std::move(bridge));
  for (int r = 1; r < q.rank(); ++r) covers.push_back(q.covers(r));
  return RankedPoset(rank, std::move(sizes), std::move(covers));
}

RankedPoset glue(const std::vector<GluePart>& parts) {
  if (parts.empty()) throw InvalidArgument("glue needs at least one part");
  const int rank = parts.front().poset.rank();
  const auto levels = static_cast<std::size_t>(rank) + 1;

  std::vector<std::vector<bool>> glues(parts.size(), std::vector<bool>(levels, false));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& part = parts[k];
    require_valid(part.poset);
    if (part.poset.rank() != rank) {
      throw InvalidArgument("glue parts have different ranks (" + std::to_string(rank) + " and " +
                            std::to_string(part.poset.rank()) + ")");
    }
    for (int r : part.glue_ranks) {
      if (r < 0 || r > rank) {
        throw InvalidArgument("glue rank " + std::to_string(r) + " outside [0," + std::to_string(rank) + "]");
      }
      glues[k][static_cast<std::size_t>(r)] = true;
    }
    if (!glues[k].front() || !glues[k].back()) {
      throw InvalidArgument("glue ranks of part " + std::to_string(k) + " must contain 0 and " +
                            std::to_string(rank));
    }
  }

  // Level layout: shared block first, then private elements per part.
  std::vector<std::size_t> sizes(levels, 0);
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(levels, 0));
  for (std::size_t r = 0; r < levels; ++r) {
    std::optional<std::size_t> shared;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (!glues[k][r]) continue;
      const std::size_t s = parts[k].poset.level_sizes()[r];
      if (shared && *shared != s) {
        throw GlueMismatch("glue level size mismatch at rank " + std::to_string(r) + ": " +
                           std::to_string(*shared) + " vs " + std::to_string(s) + " (part " +
                           std::to_string(k) + ")");
      }
      shared = s;
    }
    std::size_t next = shared.value_or(0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (glues[k][r]) continue;
      offset[k][r] = next;
      next += parts[k].poset.level_sizes()[r];
    }
    sizes[r] = next;
  }
  check_elements(sizes);

  std::vector<Reachability> reach;
  reach.reserve(parts.size());
  for (const auto& part : parts) reach.emplace_back(part.poset);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      std::vector<int> common;
      for (std::size_t r = 0; r < levels; ++r) {
        if (glues[a][r] && glues[b][r]) common.push_back(static_cast<int>(r));
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!(reach[a].up(common[i], common[j]) == reach[b].up(common[i], common[j]))) {
            throw GlueInconsistent("parts " + std::to_string(a) + " and " + std::to_string(b) +
                                   " disagree on comparability between ranks " +
                                   std::to_string(common[i]) + " and " + std::to_string(common[j]));
          }
        }
      }
    }
  }

  std::vector<CoverList> covers(static_cast<std::size_t>(rank));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (int r = 0; r < rank; ++r) {
      const auto lo = static_cast<std::uint32_t>(offset[k][static_cast<std::size_t>(r)]);
      const auto hi = static_cast<std::uint32_t>(offset[k][static_cast<std::size_t>(r) + 1]);
      for (const Cover& c : parts[k].poset.covers(r)) {
        covers[static_cast<std::size_t>(r)].push_back(Cover{c.lower + lo, c.upper + hi});
      }
    }
  }
  RankedPoset out(rank, std::move(sizes), std::move(covers));
  require_valid(out);
  return out;
}

RankedPoset dp_poset(int n, const IntervalSystem& sys, std::uint64_t copies, bool allow_non_even) {
  if (n < 1) throw InvalidArgument("dp_poset needs n >= 1");
  if (sys.n != n) {
    throw InvalidArgument("interval system is over [1," + std::to_string(sys.n) + "], expected [1," +
                          std::to_string(n) + "]");
  }
  if (copies < 1) throw InvalidArgument("dp_poset needs N >= 1");
  if (!allow_non_even) {
    const auto diags = validate_even_interval_system(sys);
    if (!diags.empty()) throw InvalidArgument("not an even interval system: " + diags.front());
  }
  RankedPoset p = chain(n + 1);
  for (const auto& iv : sys.intervals) p = replicate_interval(p, iv.lo, iv.hi, copies);
  return horizontal_double(p);
}

namespace {

// Applies D operators right-to-left: the last listed operator acts first.
struct Replication {
  int lo;
  int hi;
  std::uint64_t copies;
};

RankedPoset replicated_chain(int rank, std::vector<Replication> ops) {
  RankedPoset p = chain(rank);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) p = replicate_interval(p, it->lo, it->hi, it->copies);
  return p;
}

}  // namespace

RankedPoset lemma2_glued(int n, std::uint64_t big_n) {
  if (n < 7 || n % 2 == 0) throw InvalidArgument("lemma2 construction needs odd n >= 7, got " + std::to_string(n));
  if (big_n < 1) throw InvalidArgument("lemma2 construction needs N >= 1");
  const std::uint64_t n1 = big_n + 1;
  const std::uint64_t n2 = checked_mul(big_n, big_n, "N^2");
  const std::uint64_t n4 = checked_mul(n2, n2, "N^4");

  RankedPoset first = replicated_chain(n + 1, {{1, 2, n1}, {3, n - 3, n1}, {4, n - 2, n1}, {n - 1, n, n1}});
  RankedPoset second = replicated_chain(n + 1, {{1, n - 3, n1}, {3, n - 2, n2}, {4, n, n1}});
  RankedPoset third = replicated_chain(n + 1, {{1, n, n4}});

  const std::vector<int> wide{0, 1, 2, n - 1, n, n + 1};
  return glue({GluePart{std::move(first), wide}, GluePart{std::move(second), wide},
               GluePart{std::move(third), {0, n + 1}}});
}

RankedPoset lemma2_poset(int n, std::uint64_t big_n) { return horizontal_double(lemma2_glued(n, big_n)); }

RankedPoset lemma3_glued(std::uint64_t big_n) {
  if (big_n < 1) throw InvalidArgument("lemma3 construction needs N >= 1");
  RankedPoset first = replicated_chain(7, {{1, 2, big_n}, {2, 6, big_n}});
  RankedPoset second = replicated_chain(7, {{1, 5, big_n}, {5, 6, big_n}});
  const std::vector<int> ranks{0, 1, 6, 7};
  return glue({GluePart{std::move(first), ranks}, GluePart{std::move(second), ranks}});
}

RankedPoset lemma3_poset(std::uint64_t big_n) { return horizontal_double(lemma3_glued(big_n)); }

}  // namespace eulerian
