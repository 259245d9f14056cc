#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/poset.hpp"
#include "eulerian/subset.hpp"

namespace eulerian {

struct RankInterval {
  int lo = 1;
  int hi = 1;
  int size() const noexcept { return hi - lo + 1; }
  friend auto operator<=>(const RankInterval&, const RankInterval&) = default;
};

/// A list of subintervals of [1, n]. Order matters to dp_poset, which applies
/// the intervals in listed order.
struct IntervalSystem {
  int n = 0;
  std::vector<RankInterval> intervals;

  RankSubset as_subset(std::size_t i) const {
    return RankSubset::interval(n, intervals.at(i).lo, intervals.at(i).hi);
  }
};

/// Empty iff no interval contains another, every interval has even length,
/// and every pairwise intersection has even length.
std::vector<std::string> validate_even_interval_system(const IntervalSystem& sys);

/// D^N_[i,j]: ranks i..j are replaced by N disjoint copies, each keeping the
/// relations to the elements outside the band. An element with old index k in
/// copy c gets index c * old_level_size + k.
RankedPoset replicate_interval(const RankedPoset& p, int lo, int hi, std::uint64_t copies);

/// Composite of D^2_{i} for i = 1..rank-1 in increasing order.
RankedPoset horizontal_double(const RankedPoset& p);

/// (P minus 1̂) stacked below (Q minus 0̂); every coatom of P is covered by
/// every atom of Q. rank(P*Q) = rank(P) + rank(Q) - 1.
RankedPoset join(const RankedPoset& p, const RankedPoset& q);

struct GluePart {
  RankedPoset poset;
  /// Ranks at which this part's levels are identified with the shared level.
  /// Must contain 0 and the rank of the part.
  std::vector<int> glue_ranks;
};

/// Disjoint union with index-by-index identification of the levels listed in
/// each part's glue ranks. At rank r the shared level (if any part glues at r)
/// comes first, followed by the private elements of each non-gluing part in
/// part order.
///
/// Throws GlueMismatch when shared levels differ in size and GlueInconsistent
/// when two parts induce different comparabilities between two ranks they
/// both glue at.
RankedPoset glue(const std::vector<GluePart>& parts);

/// Chain of rank n+1, replicated N-fold along each interval of `sys` in listed
/// order, then horizontally doubled. Unless `allow_non_even` is set the system
/// must be an even interval system.
RankedPoset dp_poset(int n, const IntervalSystem& sys, std::uint64_t copies,
                     bool allow_non_even = false);

/// Three replicated chains glued at {0,1,2,n-1,n,n+1} (first two) and
/// {0,n+1} (third), before doubling. n odd, n >= 7.
RankedPoset lemma2_glued(int n, std::uint64_t big_n);
/// horizontal_double(lemma2_glued(n, N)).
RankedPoset lemma2_poset(int n, std::uint64_t big_n);

/// Two replicated rank-7 chains glued at {0,1,6,7}, before doubling.
RankedPoset lemma3_glued(std::uint64_t big_n);
/// horizontal_double(lemma3_glued(N)).
RankedPoset lemma3_poset(std::uint64_t big_n);

}  // namespace eulerian
