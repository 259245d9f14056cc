#include "eulerian/flag.hpp"

#include <optional>

#include "eulerian/errors.hpp"

namespace eulerian {

namespace {

constexpr int kMaxFlagRank = 26;

void check_table_size(int n) {
  if (n < 0 || n > kMaxFlagRank) {
    throw ResourceLimit("flag table over [1," + std::to_string(n) + "] is too large");
  }
}

struct Overflow {};

// Chain-count arithmetic. The 64-bit variant signals overflow so the caller
// can redo the enumeration in arbitrary precision.
inline void accumulate(std::uint64_t& dst, std::uint64_t v) {
  if (__builtin_add_overflow(dst, v, &dst)) throw Overflow{};
}
inline void accumulate(BigInt& dst, const BigInt& v) { dst += v; }
inline bool is_zero(std::uint64_t v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return v.is_zero(); }

template <typename Count>
class FlagEnumerator {
 public:
  FlagEnumerator(const RankedPoset& p, const Reachability& reach)
      : p_(p), reach_(reach), n_(p.rank() - 1), out_(std::size_t{1} << n_) {}

  std::vector<Count> run() {
    visit(0, std::vector<Count>{Count(1)}, 0);
    return std::move(out_);
  }

 private:
  // counts[i]: chains from 0̂ through the selected ranks ending at element i
  // of rank r. Every element lies below 1̂, so f_mask is their sum.
  void visit(int r, const std::vector<Count>& counts, std::uint64_t mask) {
    Count total(0);
    for (const Count& c : counts) accumulate(total, c);
    out_[mask] = total;
    for (int s = r + 1; s <= n_; ++s) {
      const BitMatrix& reach = reach_.up(r, s);
      std::vector<Count> next(p_.level_size(s), Count(0));
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (is_zero(counts[i])) continue;
        const Count& c = counts[i];
        reach.for_each_in_row(i, [&](std::size_t j) { accumulate(next[j], c); });
      }
      visit(s, next, mask | (std::uint64_t{1} << (s - 1)));
    }
  }

  const RankedPoset& p_;
  const Reachability& reach_;
  int n_;
  std::vector<Count> out_;
};

}  // namespace

FlagTable::FlagTable(int n_) : n(n_) {
  check_table_size(n_);
  entries.assign(std::size_t{1} << n_, BigInt(0));
}

const BigInt& FlagTable::at(const RankSubset& s) const {
  if (s.n() != n) throw InvalidArgument("subset ambient size does not match flag table");
  return entries[s.mask()];
}

LVector::LVector(int n_) : n(n_) {
  check_table_size(n_);
  entries.assign(std::size_t{1} << n_, Rational(0));
}

const Rational& LVector::at(const RankSubset& q) const {
  if (q.n() != n) throw InvalidArgument("subset ambient size does not match L-vector");
  return entries[q.mask()];
}

FlagVector flag_vector(const RankedPoset& p) { return flag_vector(p, Reachability(p)); }

FlagVector flag_vector(const RankedPoset& p, const Reachability& reach) {
  const int n = p.rank() - 1;
  FlagVector f(n);
  try {
    auto fast = FlagEnumerator<std::uint64_t>(p, reach).run();
    for (std::size_t m = 0; m < fast.size(); ++m) f.entries[m] = fast[m];
  } catch (const Overflow&) {
    f.entries = FlagEnumerator<BigInt>(p, reach).run();
  }
  return f;
}

FlagHVector flag_h(const FlagVector& f) {
  FlagHVector h = f;
  const std::size_t size = h.entries.size();
  for (int bit = 0; bit < f.n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & b) h.entries[m] -= h.entries[m ^ b];
    }
  }
  return h;
}

FlagVector flag_f(const FlagHVector& h) {
  FlagVector f = h;
  const std::size_t size = f.entries.size();
  for (int bit = 0; bit < h.n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & b) f.entries[m] += f.entries[m ^ b];
    }
  }
  return f;
}

AbPolynomial ab_index(const FlagHVector& h) {
  AbPolynomial psi(h.n);
  psi.coefficients = h.entries;
  return psi;
}

LVector l_vector(const FlagVector& f) {
  // Walsh-Hadamard transform of h, then scale by 2^-n.
  std::vector<BigInt> w = flag_h(f).entries;
  const std::size_t size = w.size();
  for (int bit = 0; bit < f.n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & b) continue;
      BigInt lo = w[m];
      BigInt hi = w[m | b];
      w[m] = lo + hi;
      w[m | b] = lo - hi;
    }
  }
  LVector l(f.n);
  const BigInt scale = pow2(static_cast<unsigned>(f.n));
  for (std::size_t m = 0; m < size; ++m) l.entries[m] = Rational(w[m], scale);
  return l;
}

CdPolynomial cd_from_l(const LVector& l) {
  const int n = l.n;
  const std::uint64_t all = full_mask(n);
  for (std::uint64_t q = 0; q <= all; ++q) {
    if (l.entries[q] != 0 && !is_even_mask(q)) {
      throw NotCdExpressible("L" + RankSubset(n, q).to_string() + " = " + to_string(l.entries[q]) +
                             " is nonzero on a non-even set");
    }
  }
  CdPolynomial phi(n);
  for (const CdWord& w : cd_words(n)) {
    const std::uint64_t supp = w.support().mask();
    const std::uint64_t free = all & ~supp;
    Rational sum = 0;
    // Supersets of supp(w): supp | sub for every sub of the complement.
    for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
      const std::uint64_t q = supp | sub;
      if (evenly_contains_mask(supp, q)) sum += l.entries[q];
      if (sub == 0) break;
    }
    const int r = w.d_count();
    Rational coefficient = sum * Rational(pow2(static_cast<unsigned>(r)));
    if (r % 2 != 0) coefficient = -coefficient;
    if (boost::multiprecision::denominator(coefficient) != 1) {
      throw InternalError("cd-coefficient of " + w.letters() + " is non-integral: " + to_string(coefficient));
    }
    phi.add_term(w, boost::multiprecision::numerator(coefficient));
  }
  return phi;
}

CdPolynomial cd_index(const RankedPoset& p) { return cd_from_l(l_vector(flag_vector(p))); }

}  // namespace eulerian
