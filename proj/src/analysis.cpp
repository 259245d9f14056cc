#include "eulerian/analysis.hpp"

#include <algorithm>
#include <bit>

#include "eulerian/errors.hpp"

namespace eulerian {

std::int64_t LimitLVector::at(std::uint64_t mask) const {
  auto it = entries.find(mask);
  return it == entries.end() ? 0 : it->second;
}

LimitLVector limit_l_vector(const IntervalSystem& sys, std::size_t max_intervals) {
  const std::size_t k = sys.intervals.size();
  if (k > max_intervals || k >= 63) {
    throw ResourceLimit("limit L-vector over " + std::to_string(k) + " intervals exceeds the limit of " +
                        std::to_string(max_intervals));
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(k);
  for (std::size_t i = 0; i < k; ++i) masks.push_back(sys.as_subset(i).mask());

  LimitLVector out{sys.n, {}};
  const std::uint64_t families = std::uint64_t{1} << k;
  for (std::uint64_t family = 0; family < families; ++family) {
    std::uint64_t unite = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((family >> i) & 1U) unite |= masks[i];
    }
    out.entries[unite] += (std::popcount(family) % 2 == 0) ? 1 : -1;
  }
  std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LimitLVector operator+(const LimitLVector& a, const LimitLVector& b) {
  if (a.n != b.n) throw InvalidArgument("adding limit L-vectors over different ranks");
  LimitLVector out = a;
  for (const auto& [mask, v] : b.entries) out.entries[mask] += v;
  std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigInt limit_cd_coefficient(const CdWord& w, const LimitLVector& limit) {
  if (w.degree() != limit.n) {
    throw InvalidArgument("word '" + w.letters() + "' has degree " + std::to_string(w.degree()) +
                          ", limit table is over [1," + std::to_string(limit.n) + "]");
  }
  const std::uint64_t supp = w.support().mask();
  BigInt sum = 0;
  for (const auto& [q, v] : limit.entries) {
    if (evenly_contains_mask(supp, q)) sum += v;
  }
  const int r = w.d_count();
  BigInt factor = pow2(static_cast<unsigned>(r));
  if (r % 2 != 0) factor = -factor;
  return factor * sum;
}

BigInt limit_cd_coefficient(const CdWord& w, const IntervalSystem& sys) {
  return limit_cd_coefficient(w, limit_l_vector(sys));
}

IntervalSystem d_position_system(const CdWord& w) {
  IntervalSystem sys{w.degree(), {}};
  for (const auto& [lo, hi] : w.support().runs()) {
    for (int s = lo; s < hi; s += 2) sys.intervals.push_back(RankInterval{s, s + 1});
  }
  return sys;
}

// ---------------------------------------------------------------------------

bool inequality_precondition(const RankSubset& t, const RankSubset& v) {
  if (t.n() != v.n() || !t.is_subset_of(v)) return false;
  for (const auto& [lo, hi] : v.runs()) {
    if ((t & RankSubset::interval(v.n(), lo, hi)).size() > 1) return false;
  }
  return true;
}

namespace {

void require_inequality_sets(int n, const RankSubset& t, const RankSubset& v) {
  if (t.n() != n || v.n() != n) throw InvalidArgument("T and V must be subsets of [1," + std::to_string(n) + "]");
  if (!inequality_precondition(t, v)) {
    throw InvalidArgument("T=" + t.to_string() + ", V=" + v.to_string() +
                          " violate the inequality precondition (T in V, at most one element of T per "
                          "maximal interval of V)");
  }
}

}  // namespace

BigInt inequality_f_form(const FlagVector& f, const RankSubset& t, const RankSubset& v) {
  require_inequality_sets(f.n, t, v);
  const std::uint64_t s = v.complement().mask();
  const std::uint64_t tm = t.mask();
  const int t_size = t.size();
  BigInt total = 0;
  for (std::uint64_t r = tm;; r = (r - 1) & tm) {
    const int missing = t_size - std::popcount(r);
    BigInt term = f[s | r] << static_cast<unsigned>(missing);
    if (missing % 2 != 0) term = -term;
    total += term;
    if (r == 0) break;
  }
  return total;
}

Rational inequality_l_form(const LVector& l, const RankSubset& t, const RankSubset& v) {
  require_inequality_sets(l.n, t, v);
  const std::uint64_t free = (v - t).mask();
  Rational total = 0;
  for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
    total += l[t.mask() | sub];
    if (sub == 0) break;
  }
  return t.size() % 2 == 0 ? total : Rational(-total);
}

std::vector<std::pair<RankSubset, RankSubset>> inequality_pairs(int n) {
  std::vector<std::pair<RankSubset, RankSubset>> out;
  const std::uint64_t all = full_mask(n);
  for (std::uint64_t vm = 0; vm <= all; ++vm) {
    const RankSubset v(n, vm);
    const auto runs = v.runs();
    // Each run contributes nothing or one of its positions.
    std::vector<std::uint64_t> partial{0};
    for (const auto& [lo, hi] : runs) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t base : partial) {
        next.push_back(base);
        for (int s = lo; s <= hi; ++s) next.push_back(base | (std::uint64_t{1} << (s - 1)));
      }
      partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end());
    for (std::uint64_t tm : partial) out.emplace_back(RankSubset(n, tm), v);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(WordClassTag tag) {
  switch (tag) {
    case WordClassTag::Part1a: return "Part1a";
    case WordClassTag::Part1b: return "Part1b";
    case WordClassTag::Part2: return "Part2";
    case WordClassTag::Part3: return "Part3";
  }
  return "?";
}

namespace {

struct Shape {
  std::vector<std::size_t> d_offsets;
  std::size_t leading = 0;   // c's before the first d
  std::size_t trailing = 0;  // c's after the last d
};

Shape shape_of(const CdWord& w) {
  Shape sh;
  const auto& s = w.letters();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'd') sh.d_offsets.push_back(i);
  }
  if (!sh.d_offsets.empty()) {
    sh.leading = sh.d_offsets.front();
    sh.trailing = s.size() - 1 - sh.d_offsets.back();
  }
  return sh;
}

std::optional<BadSubword> find_bad_subword(const CdWord& w) {
  const auto sh = shape_of(w);
  const auto& s = w.letters();
  for (std::size_t k = 0; k + 1 < sh.d_offsets.size(); ++k) {
    const std::size_t gap = sh.d_offsets[k + 1] - sh.d_offsets[k] - 1;
    if (gap != 1) {
      return BadSubword{CdWord(s.substr(sh.d_offsets[k], gap + 2)), sh.d_offsets[k], static_cast<int>(gap)};
    }
  }
  const auto at = s.find("ccdcc");
  if (at != std::string::npos) return BadSubword{CdWord("ccdcc"), at, std::nullopt};
  return std::nullopt;
}

Certificate make_certificate(const CdWord& w, WordClassTag tag, const Shape& sh) {
  const int n = w.degree();
  const int r = static_cast<int>(sh.d_offsets.size());
  std::vector<int> s_members;
  std::vector<int> t_members;
  const int i = static_cast<int>(sh.leading);
  if (tag == WordClassTag::Part1a) {
    const int j = static_cast<int>(sh.trailing);
    if (i == 0) {
      t_members = {1};
    } else if (i == 1) {
      s_members = {1};
      t_members = {2};
    } else if (j == 0) {  // c^i d: mirror of d c^i
      t_members = {n};
    } else {  // c^i d c: mirror of c d c^i
      s_members = {n};
      t_members = {n - 1};
    }
  } else {
    t_members.push_back(i + 2);
    for (int k = 1; k <= r - 1; ++k) {
      s_members.push_back(i + 3 * k);
      t_members.push_back(i + 3 * k + 1);
    }
  }
  const RankSubset s = RankSubset::from_members(n, s_members);
  Certificate cert{s, RankSubset::from_members(n, t_members), s.complement(), r};
  if (!inequality_precondition(cert.t, cert.v)) {
    throw InternalError("certificate for " + w.letters() + " violates the inequality precondition");
  }
  return cert;
}

}  // namespace

WordClass classify_word(const CdWord& w) {
  if (w.degree() < 1) throw InvalidArgument("classify_word needs a word of degree >= 1");
  const Shape sh = shape_of(w);
  WordClass out;
  if (sh.d_offsets.empty()) {
    out.tag = WordClassTag::Part2;
    return out;
  }
  if (sh.d_offsets.size() == 1) {
    if (std::min(sh.leading, sh.trailing) <= 1) {
      out.tag = WordClassTag::Part1a;
      out.certificate = make_certificate(w, out.tag, sh);
      return out;
    }
  } else {
    bool alternating = true;
    for (std::size_t k = 0; k + 1 < sh.d_offsets.size(); ++k) {
      alternating = alternating && sh.d_offsets[k + 1] - sh.d_offsets[k] == 2;
    }
    if (alternating) {
      out.tag = WordClassTag::Part1b;
      out.certificate = make_certificate(w, out.tag, sh);
      return out;
    }
  }
  out.tag = WordClassTag::Part3;
  out.witness = find_bad_subword(w);
  if (!out.witness) {
    throw InternalError("word " + w.letters() + " is in Part3 but has no ccdcc or d c^m d (m != 1) subword");
  }
  return out;
}

std::int64_t count_part1_words(int n) {
  if (n < 5) throw InvalidArgument("count_part1_words is stated for n >= 5, got " + std::to_string(n));
  std::int64_t count = 0;
  for (const CdWord& w : cd_words(n)) {
    const auto tag = classify_word(w).tag;
    if (tag == WordClassTag::Part1a || tag == WordClassTag::Part1b) ++count;
  }
  return count;
}

std::int64_t part1_count_formula(int n) {
  if (n < 5) throw InvalidArgument("the Part1 count formula is stated for n >= 5");
  const std::int64_t m = n - 2;
  return (m * (m - 1) / 2) / 3 + 4;
}

Certificate nonneg_certificate(const CdWord& w) {
  const WordClass wc = classify_word(w);
  if (!wc.certificate) {
    throw InvalidArgument("word " + w.letters() + " is " + to_string(wc.tag) +
                          "; certificates exist only for Part1a and Part1b");
  }
  return *wc.certificate;
}

Rational certificate_sum(const LVector& l, const Certificate& cert) {
  if (l.n != cert.v.n()) throw InvalidArgument("certificate and L-vector ranks differ");
  const std::uint64_t free = (cert.v - cert.t).mask();
  Rational total = 0;
  for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
    const std::uint64_t q = cert.t.mask() | sub;
    if (is_even_mask(q)) total += l[q];
    if (sub == 0) break;
  }
  total *= Rational(pow2(static_cast<unsigned>(cert.r)));
  return cert.t.size() % 2 == 0 ? total : Rational(-total);
}

NegativeWitness negative_witness(const CdWord& w, std::uint64_t big_n) {
  const WordClass wc = classify_word(w);
  if (wc.tag != WordClassTag::Part3) {
    throw InvalidArgument("negative witnesses exist only for Part3 words; " + w.letters() + " is " +
                          to_string(wc.tag));
  }
  if (big_n < 1) throw InvalidArgument("negative_witness needs N >= 1");
  const BadSubword& bad = *wc.witness;

  NegativeWitness out;
  out.word = w;
  out.bad = bad;
  const int width = bad.subword.degree();
  RankedPoset base;
  if (!bad.gap) {
    base = lemma3_poset(big_n);
    out.base = "lemma3(" + std::to_string(big_n) + ")";
  } else if (width % 2 == 0) {
    base = dp_poset(width, IntervalSystem{width, {RankInterval{1, width}}}, big_n);
    out.base = "dp(" + std::to_string(width) + ",[[1," + std::to_string(width) + "]]," + std::to_string(big_n) + ")";
  } else {
    base = lemma2_poset(width, big_n);
    out.base = "lemma2(" + std::to_string(width) + "," + std::to_string(big_n) + ")";
  }

  const auto& letters = w.letters();
  out.prefix_degree = CdWord(letters.substr(0, bad.offset)).degree();
  out.suffix_degree = CdWord(letters.substr(bad.offset + bad.subword.length())).degree();
  RankedPoset poset = std::move(base);
  if (out.prefix_degree > 0) poset = join(boolean(out.prefix_degree + 1), poset);
  if (out.suffix_degree > 0) poset = join(poset, boolean(out.suffix_degree + 1));
  out.coefficient = cd_index(poset).coefficient(w);
  out.poset = std::move(poset);
  return out;
}

}  // namespace eulerian
