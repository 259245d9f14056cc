#pragma once

#include <cstdint>
#include <vector>

#include "eulerian/cd_polynomial.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/poset.hpp"
#include "eulerian/subset.hpp"

namespace eulerian {

/// Table indexed by subsets S of [1, n]; entry `mask` belongs to the subset
/// with that bitmask. Used for flag f-vectors (nonnegative) and flag h-vectors
/// (signed).
struct FlagTable {
  int n = 0;
  std::vector<BigInt> entries;

  explicit FlagTable(int n_ = 0);
  const BigInt& operator[](std::uint64_t mask) const { return entries[mask]; }
  BigInt& operator[](std::uint64_t mask) { return entries[mask]; }
  const BigInt& at(const RankSubset& s) const;
  friend bool operator==(const FlagTable&, const FlagTable&) = default;
};

using FlagVector = FlagTable;
using FlagHVector = FlagTable;

/// ce-index coefficients L_Q, exact rationals with power-of-two denominators.
struct LVector {
  int n = 0;
  std::vector<Rational> entries;

  explicit LVector(int n_ = 0);
  const Rational& operator[](std::uint64_t mask) const { return entries[mask]; }
  const Rational& at(const RankSubset& q) const;
  friend bool operator==(const LVector&, const LVector&) = default;
};

/// f_S for every S in [1, n], n = rank - 1.
FlagVector flag_vector(const RankedPoset& p);
FlagVector flag_vector(const RankedPoset& p, const Reachability& reach);

/// h_S = sum over T in S of (-1)^|S \ T| f_T.
FlagHVector flag_h(const FlagVector& f);
/// f_S = sum over T in S of h_T.
FlagVector flag_f(const FlagHVector& h);

/// Psi(a, b) = sum h_S u_S.
AbPolynomial ab_index(const FlagHVector& h);

/// L_Q = 2^-n sum_S (-1)^|S & Q| h_S, the coefficient of v_Q after a = (c+e)/2,
/// b = (c-e)/2. Defined for any flag vector.
LVector l_vector(const FlagVector& f);

/// [w] = (-2)^r sum over Q evenly containing supp(w) of L_Q.
/// Throws NotCdExpressible when some L_Q on a non-even Q is nonzero and
/// InternalError if a coefficient comes out non-integral.
CdPolynomial cd_from_l(const LVector& l);

/// cd-index through the flag vector and L-vector.
CdPolynomial cd_index(const RankedPoset& p);

}  // namespace eulerian
