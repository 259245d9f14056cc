#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/cd_polynomial.hpp"
#include "eulerian/constructions.hpp"
#include "eulerian/flag.hpp"

namespace eulerian {

// ---------------------------------------------------------------------------
// Limit posets

inline constexpr std::size_t kDefaultMaxLimitIntervals = 20;

/// Sparse signed table over subsets of [1, n]; absent entries are zero.
struct LimitLVector {
  int n = 0;
  std::map<std::uint64_t, std::int64_t> entries;

  std::int64_t at(std::uint64_t mask) const;
  std::int64_t at(const RankSubset& s) const { return at(s.mask()); }
};

/// L_S = sum over subfamilies J of sys with union(J) = S of (-1)^|J|.
/// Enumerates all 2^k subfamilies; throws ResourceLimit when k exceeds
/// `max_intervals`.
LimitLVector limit_l_vector(const IntervalSystem& sys,
                            std::size_t max_intervals = kDefaultMaxLimitIntervals);
LimitLVector operator+(const LimitLVector& a, const LimitLVector& b);

/// The cd-coefficient conversion applied to a limit table.
BigInt limit_cd_coefficient(const CdWord& w, const LimitLVector& limit);
BigInt limit_cd_coefficient(const CdWord& w, const IntervalSystem& sys);

/// The 2-element intervals at the d positions of w.
IntervalSystem d_position_system(const CdWord& w);

// ---------------------------------------------------------------------------
// Inequality lemma

/// T subset of V, and every maximal interval of V meets T at most once.
bool inequality_precondition(const RankSubset& t, const RankSubset& v);

/// sum over R in T of (-2)^|T \ R| f_{S u R}, S = [1,n] \ V.
BigInt inequality_f_form(const FlagVector& f, const RankSubset& t, const RankSubset& v);
/// (-1)^|T| sum over T <= Q <= V of L_Q.
Rational inequality_l_form(const LVector& l, const RankSubset& t, const RankSubset& v);

/// Every (T, V) over [1, n] meeting inequality_precondition, in (V, T) mask order.
std::vector<std::pair<RankSubset, RankSubset>> inequality_pairs(int n);

// ---------------------------------------------------------------------------
// Word classification

enum class WordClassTag { Part1a, Part1b, Part2, Part3 };
std::string to_string(WordClassTag tag);

/// A subword ccdcc or d c^m d (m != 1) whose coefficient is unbounded below.
struct BadSubword {
  CdWord subword;
  std::size_t offset = 0;  // letter offset in the full word
  /// Number of c's between the two d's, or nullopt for ccdcc.
  std::optional<int> gap;
};

/// Sets for the inequality lemma certifying [w] >= 0; V = [1,n] \ S.
struct Certificate {
  RankSubset s;
  RankSubset t;
  RankSubset v;
  int r = 0;
};

struct WordClass {
  WordClassTag tag = WordClassTag::Part2;
  std::optional<BadSubword> witness;       // Part3 only
  std::optional<Certificate> certificate;  // Part1a / Part1b only
};

WordClass classify_word(const CdWord& w);

/// Number of degree-n words in Part1a or Part1b, by enumeration. n >= 5.
std::int64_t count_part1_words(int n);
/// floor(C(n-2, 2) / 3) + 4.
std::int64_t part1_count_formula(int n);

/// Throws InvalidArgument unless w is a Part1a or Part1b word.
Certificate nonneg_certificate(const CdWord& w);

/// 2^r (-1)^|T| sum over even Q with T <= Q <= V of L_Q. Equals [w] for
/// every Eulerian L-vector.
Rational certificate_sum(const LVector& l, const Certificate& cert);

struct NegativeWitness {
  CdWord word;
  BadSubword bad;
  std::string base;        // e.g. "lemma3(3)"
  int prefix_degree = 0;   // joined on the left as boolean(prefix_degree + 1)
  int suffix_degree = 0;   // joined on the right as boolean(suffix_degree + 1)
  RankedPoset poset;
  BigInt coefficient;      // [word] in cd_index(poset)
};

/// Builds the base family for the bad subword of a Part3 word at parameter N
/// and joins Boolean algebras around it for the rest of the word.
NegativeWitness negative_witness(const CdWord& w, std::uint64_t big_n);

}  // namespace eulerian
