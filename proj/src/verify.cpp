#include "eulerian/verify.hpp"

#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "eulerian/analysis.hpp"
#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"
#include "eulerian/expr.hpp"
#include "eulerian/flag.hpp"

namespace eulerian {

const std::vector<CorpusEntry>& eulerian_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    const std::vector<std::string> exprs{
        "boolean(1)", "boolean(2)", "boolean(3)", "boolean(4)", "boolean(5)",
        "double(chain(2))", "double(chain(3))", "double(chain(4))", "double(chain(5))", "double(chain(6))",
        "dp(2,[[1,2]],2)", "dp(4,[[1,4]],2)", "dp(4,[[1,2],[3,4]],2)", "dp(4,[[2,3]],2)",
        "dp(5,[[1,2],[4,5]],2)", "dp(6,[[1,6]],2)", "dp(6,[[1,4],[3,6]],2)", "dp(6,[[2,5]],1)",
        "dp(6,[[1,2],[3,4],[5,6]],2)",
        "lemma3(2)",
        "join(boolean(3),double(chain(3)))", "join(dp(4,[[1,4]],2),boolean(2))",
        "join(boolean(2),dp(4,[[1,2],[3,4]],2))", "join(double(chain(2)),boolean(4))",
        "dual(join(boolean(3),dp(4,[[2,3]],2)))", "dual(lemma3(2))", "dual(dp(5,[[1,2],[4,5]],2))",
    };
    std::vector<CorpusEntry> out;
    for (const auto& text : exprs) out.push_back({text, evaluate(parse_expression(text))});
    return out;
  }();
  return corpus;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& row) {
    r_.rows.push_back(std::string(ok ? "ok   " : "FAIL ") + row);
    if (!ok) r_.passed = false;
  }
  void note(const std::string& text) { r_.notes.push_back(text); }

 private:
  SuiteResult& r_;
};

std::string str(const BigInt& v) { return v.str(); }

CdPolynomial c_power_poly(int n) { return CdPolynomial::monomial(CdWord::c_power(n)); }

// ---------------------------------------------------------------------------

void double_chain(SuiteResult& res) {
  Recorder rec(res);
  for (int r = 2; r <= 7; ++r) {
    const CdPolynomial phi = cd_index(horizontal_double(chain(r)));
    rec.check(phi == c_power_poly(r - 1), "double(chain(" + std::to_string(r) + ")) -> " + phi.to_string());
  }
}

void lemma1(SuiteResult& res) {
  Recorder rec(res);
  for (int n : {4, 6}) {
    for (int big_n : {1, 2, 3}) {
      const CdPolynomial got = cd_index(dp_poset(n, IntervalSystem{n, {RankInterval{1, n}}}, static_cast<std::uint64_t>(big_n)));
      CdPolynomial cc_minus_2d = CdPolynomial::monomial(CdWord("cc")) - CdPolynomial::monomial(CdWord("d"), 2);
      const CdPolynomial expected = c_power_poly(n) * BigInt(big_n + 1) - cd_power(cc_minus_2d, n / 2) * BigInt(big_n);
      rec.check(got == expected, "n=" + std::to_string(n) + " N=" + std::to_string(big_n) + ": " + got.to_string() +
                                     " vs expected " + expected.to_string());
      // With D^N meaning N copies (2^n N^k maximal chains, c^n at N = 1) the
      // family carries the closed form shifted by one.
      const CdPolynomial shifted = c_power_poly(n) * BigInt(big_n) - cd_power(cc_minus_2d, n / 2) * BigInt(big_n - 1);
      rec.note("n=" + std::to_string(n) + " N=" + std::to_string(big_n) + ": N c^n - (N-1)(cc-2d)^(n/2) " +
               (got == shifted ? "matches" : "does NOT match") + "; maximal chains = " +
               count_maximal_chains(dp_poset(n, IntervalSystem{n, {RankInterval{1, n}}}, static_cast<std::uint64_t>(big_n))).str());
    }
  }
}

void lemma2(SuiteResult& res) {
  Recorder rec(res);
  const int n = 7;
  const CdWord w("dcccd");
  for (std::int64_t big_n : {1, 2}) {
    const RankedPoset p = lemma2_poset(n, static_cast<std::uint64_t>(big_n));
    const Reachability reach(p);
    const bool euler = is_eulerian(p, reach).eulerian;
    const BigInt coefficient = cd_from_l(l_vector(flag_vector(p, reach))).coefficient(w);
    const BigInt expected = 4 * (big_n * big_n - big_n * big_n * big_n * big_n);
    rec.check(euler && coefficient == expected,
              "N=" + std::to_string(big_n) + ": eulerian=" + (euler ? "yes" : "no") + " [dc^3d]=" + str(coefficient) +
                  " expected 4(N^2-N^4)=" + str(expected));
  }

  // Before doubling, intervals between identified elements at ranks 2 and
  // n-1 carry one more even-rank than odd-rank element.
  const RankedPoset glued = lemma2_glued(n, 2);
  const Reachability reach(glued);
  bool balanced = true;
  std::size_t pairs = 0;
  const std::size_t shared_low = 3;  // N+1 identified elements at rank 2
  const std::size_t shared_high = 3;
  for (std::size_t x = 0; x < shared_low; ++x) {
    reach.up(2, n - 1).for_each_in_row(x, [&](std::size_t y) {
      if (y >= shared_high) return;
      std::int64_t diff = 0;
      for (int r = 2; r <= n - 1; ++r) {
        const auto& a = reach.up(2, r);
        const auto& b = reach.down(n - 1, r);
        std::int64_t count = 0;
        for (std::size_t word = 0; word < a.words_per_row(); ++word) {
          count += std::popcount(a.row(x)[word] & b.row(y)[word]);
        }
        diff += (r % 2 == 0) ? count : -count;
      }
      balanced = balanced && diff == 1;
      ++pairs;
    });
  }
  rec.check(balanced && pairs > 0,
            "pre-double n=7 N=2: " + std::to_string(pairs) + " identified intervals [x,y] (ranks 2..6) have #even - #odd = 1");

  // Sum of the three limit tables vanishes off even sets and has the three
  // nonzero entries evenly containing {1,2,n-1,n}.
  const LimitLVector sum = limit_l_vector(IntervalSystem{n, {{1, 2}, {3, n - 3}, {4, n - 2}, {n - 1, n}}}) +
                           limit_l_vector(IntervalSystem{n, {{1, n - 3}, {3, n - 2}, {4, n}}}) +
                           limit_l_vector(IntervalSystem{n, {{1, n}}});
  bool even_only = true;
  for (const auto& [q, v] : sum.entries) even_only = even_only && is_even_mask(q);
  rec.check(even_only, "three-system limit L-vector vanishes on non-even sets");
  const RankSubset ends = RankSubset(n, {1, 2, n - 1, n});
  const RankSubset all = RankSubset::full(n);
  std::map<std::uint64_t, std::int64_t> containing;
  for (const auto& [q, v] : sum.entries) {
    if (evenly_contains_mask(ends.mask(), q)) containing[q] = v;
  }
  const std::map<std::uint64_t, std::int64_t> expected{
      {ends.mask(), 1}, {(all - RankSubset(n, {3})).mask(), -1}, {(all - RankSubset(n, {n - 2})).mask(), -1}};
  rec.check(containing == expected, "limit entries evenly containing {1,2,6,7}: L{1,2,6,7}=1, L[1,7]-{3}=-1, L[1,7]-{5}=-1");
  rec.check(limit_cd_coefficient(w, sum) == -4, "limit [dc^3d] of the three-system sum = " + str(limit_cd_coefficient(w, sum)));
}

void lemma3(SuiteResult& res) {
  Recorder rec(res);
  const CdWord w("ccdcc");
  for (std::int64_t big_n : {1, 2, 3}) {
    const RankedPoset p = lemma3_poset(static_cast<std::uint64_t>(big_n));
    const Reachability reach(p);
    const bool euler = is_eulerian(p, reach).eulerian;
    const BigInt coefficient = cd_from_l(l_vector(flag_vector(p, reach))).coefficient(w);
    const BigInt expected = -2 * (big_n - 1) * (big_n - 1);
    rec.check(euler && coefficient == expected, "N=" + std::to_string(big_n) + ": eulerian=" + (euler ? "yes" : "no") +
                                                    " [ccdcc]=" + str(coefficient) + " expected -2(N-1)^2=" + str(expected));
  }
}

void limit_l(SuiteResult& res) {
  Recorder rec(res);
  const LimitLVector single = limit_l_vector(IntervalSystem{4, {{1, 4}}});
  const std::map<std::uint64_t, std::int64_t> expected{{0, 1}, {RankSubset::full(4).mask(), -1}};
  rec.check(single.entries == expected, "n=4 {[1,4]}: only L{}=1 and L[1,4]=-1 are nonzero");

  const LimitLVector pair = limit_l_vector(IntervalSystem{6, {{1, 2}, {2, 6}}}) + limit_l_vector(IntervalSystem{6, {{1, 5}, {5, 6}}});
  auto halved = [&](std::initializer_list<int> q) { return Rational(pair.at(RankSubset(6, q)), 2); };
  rec.check(halved({3, 4}) == 0 && halved({1, 2, 3, 4}) == 0 && halved({3, 4, 5, 6}) == 0 && halved({1, 2, 3, 4, 5, 6}) == 1,
            "lemma3 halved sum: L34=" + to_string(halved({3, 4})) + " L1234=" + to_string(halved({1, 2, 3, 4})) +
                " L3456=" + to_string(halved({3, 4, 5, 6})) + " L123456=" + to_string(halved({1, 2, 3, 4, 5, 6})));

  std::size_t words = 0;
  bool all_ok = true;
  for (int n = 1; n <= 6; ++n) {
    for (const CdWord& w : cd_words(n)) {
      const BigInt got = limit_cd_coefficient(w, d_position_system(w));
      const bool ok = got == pow2(static_cast<unsigned>(w.d_count()));
      if (!ok) rec.check(false, "limit [" + w.letters() + "] = " + str(got));
      all_ok = all_ok && ok;
      ++words;
    }
  }
  rec.check(all_ok, "limit [w] over the d-position pairs equals 2^r for all " + std::to_string(words) + " words of degree 1..6");
}

void inequality(SuiteResult& res) {
  Recorder rec(res);
  std::size_t instances = 0;
  std::optional<std::string> counterexample;
  for (const auto& entry : eulerian_corpus()) {
    const FlagVector f = flag_vector(entry.poset);
    const LVector l = l_vector(f);
    const int n = f.n;
    bool nonneg = true, sign_equiv = true, exact = true;
    for (const auto& [t, v] : inequality_pairs(n)) {
      const BigInt ff = inequality_f_form(f, t, v);
      const Rational lf = inequality_l_form(l, t, v);
      nonneg = nonneg && ff >= 0 && lf >= 0;
      sign_equiv = sign_equiv && ((ff > 0) == (lf > 0)) && ((ff == 0) == (lf == 0));
      const unsigned outside = static_cast<unsigned>((v - t).size());
      if (!counterexample && Rational(ff) != lf * Rational(pow2(outside))) {
        counterexample = entry.name + " T=" + t.to_string() + " V=" + v.to_string() + ": f-form=" + str(ff) +
                         ", 2^|V\\T| * L-form=" + to_string(lf * Rational(pow2(outside)));
      }
      const auto scale = static_cast<unsigned>(n) - outside;  // |S| + |T|
      exact = exact && Rational(ff) == lf * Rational(pow2(scale));
      ++instances;
    }
    rec.check(nonneg && sign_equiv && exact,
              entry.name + ": f-form >= 0, L-form >= 0, same sign, f-form = 2^(|S|+|T|) L-form");
  }
  if (counterexample) {
    rec.note("conjecture f-form = 2^|V\\T| * L-form refuted (" + *counterexample +
             "); downgraded to sign-equivalence. Exact relation verified instead: f-form = 2^(n-|V\\T|) * L-form");
  } else {
    rec.note("conjecture f-form = 2^|V\\T| * L-form held on all instances");
  }
  rec.note(std::to_string(instances) + " (poset, T, V) instances checked");
}

void note_count(SuiteResult& res) {
  Recorder rec(res);
  for (int n = 1; n <= 10; ++n) {
    std::map<WordClassTag, std::size_t> counts;
    bool ok = true;
    for (const CdWord& w : cd_words(n)) {
      const WordClass wc = classify_word(w);
      counts[wc.tag] += 1;
      const bool is_cn = w == CdWord::c_power(n);
      ok = ok && (is_cn == (wc.tag == WordClassTag::Part2));
      ok = ok && (wc.tag != WordClassTag::Part3 || wc.witness.has_value());
    }
    const std::size_t part1 = counts[WordClassTag::Part1a] + counts[WordClassTag::Part1b];
    const std::size_t total = part1 + counts[WordClassTag::Part2] + counts[WordClassTag::Part3];
    ok = ok && total == cd_words(n).size() && counts[WordClassTag::Part2] == 1;
    std::string row = "n=" + std::to_string(n) + ": part1=" + std::to_string(part1) + " part2=" +
                      std::to_string(counts[WordClassTag::Part2]) + " part3=" + std::to_string(counts[WordClassTag::Part3]);
    if (n >= 5) {
      const auto formula = part1_count_formula(n);
      ok = ok && count_part1_words(n) == formula && static_cast<std::int64_t>(part1) == formula;
      row += " formula=" + std::to_string(formula);
    }
    rec.check(ok, row);
  }
  bool fib = cd_words(0).size() == 1 && cd_words(1).size() == 1;
  for (int n = 2; n <= 12; ++n) fib = fib && cd_words(n).size() == cd_words(n - 1).size() + cd_words(n - 2).size();
  rec.check(fib, "|cd_words(n)| follows the Fibonacci recurrence for n <= 12 (|cd_words(12)| = " +
                     std::to_string(cd_words(12).size()) + ")");
}

void part2(SuiteResult& res) {
  Recorder rec(res);
  for (const auto& entry : eulerian_corpus()) {
    const CdPolynomial phi = cd_index(entry.poset);
    const BigInt k = phi.coefficient(CdWord::c_power(phi.degree()));
    rec.check(k == 1, entry.name + ": [c^" + std::to_string(phi.degree()) + "] = " + str(k));
  }
}

void join_mult(SuiteResult& res) {
  Recorder rec(res);
  const auto& corpus = eulerian_corpus();
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{
      {2, 2}, {1, 6}, {5, 2}, {11, 1}, {2, 12}, {3, 5}, {6, 11}, {10, 7}, {19, 1}, {13, 2}};
  for (const auto& [a, b] : pairs) {
    const auto& p = corpus.at(a);
    const auto& q = corpus.at(b);
    const RankedPoset joined = join(p.poset, q.poset);
    const bool euler = is_eulerian(joined).eulerian;
    const bool mult = cd_index(joined) == cd_product(cd_index(p.poset), cd_index(q.poset));
    rec.check(euler && mult, "join(" + p.name + ", " + q.name + "): eulerian=" + (euler ? "yes" : "no") +
                                 " cd multiplicative=" + (mult ? "yes" : "no"));
  }
}

void witness(SuiteResult& res) {
  Recorder rec(res);
  for (std::int64_t big_n : {1, 2, 3}) {
    const BigInt got = negative_witness(CdWord("cdd"), static_cast<std::uint64_t>(big_n)).coefficient;
    rec.check(got == -4 * big_n, "cdd N=" + std::to_string(big_n) + ": [cdd]=" + str(got) + " expected -4N=" + std::to_string(-4 * big_n));
    rec.note("cdd N=" + std::to_string(big_n) + ": -4(N-1) = " + std::to_string(-4 * (big_n - 1)) +
             (got == -4 * (big_n - 1) ? " matches" : " does NOT match"));
  }
  for (std::int64_t big_n : {1, 2, 3}) {
    const BigInt got = negative_witness(CdWord("ccdcc"), static_cast<std::uint64_t>(big_n)).coefficient;
    const std::int64_t expected = -2 * (big_n - 1) * (big_n - 1);
    rec.check(got == expected, "ccdcc N=" + std::to_string(big_n) + ": [ccdcc]=" + str(got) + " expected " + std::to_string(expected));
  }
  for (std::int64_t big_n : {1, 2}) {
    const BigInt got = negative_witness(CdWord("dcccd"), static_cast<std::uint64_t>(big_n)).coefficient;
    const std::int64_t expected = 4 * (big_n * big_n - big_n * big_n * big_n * big_n);
    rec.check(got == expected, "dcccd N=" + std::to_string(big_n) + ": [dc^3d]=" + str(got) + " expected " + std::to_string(expected));
  }
  std::size_t tested = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const CdWord& w : cd_words(n)) {
      if (classify_word(w).tag != WordClassTag::Part3) continue;
      std::vector<BigInt> values;
      std::string base;
      for (std::uint64_t big_n : {2U, 3U, 4U}) {
        auto wit = negative_witness(w, big_n);
        values.push_back(wit.coefficient);
        base = wit.base;
      }
      const bool decreasing = values[0] > values[1] && values[1] > values[2];
      rec.check(decreasing, w.letters() + " via " + base + " (N=4), N=2,3,4: " + str(values[0]) + ", " + str(values[1]) + ", " + str(values[2]));
      ++tested;
    }
  }
  rec.note(std::to_string(tested) + " Part3 words of degree <= 7 tested for strict decrease");
}

void boolean_positivity(SuiteResult& res) {
  Recorder rec(res);
  for (int k = 1; k <= 6; ++k) {
    const CdPolynomial phi = cd_index(boolean(k));
    bool positive = true;
    for (const CdWord& w : cd_words(k - 1)) positive = positive && phi.coefficient(w) > 0;
    rec.check(positive, "boolean(" + std::to_string(k) + "): " + phi.to_string());
  }
}

void duality(SuiteResult& res) {
  Recorder rec(res);
  for (const auto& entry : eulerian_corpus()) {
    const RankedPoset d = dual(entry.poset);
    const FlagVector f = flag_vector(entry.poset);
    const FlagVector fd = flag_vector(d);
    bool flags = true;
    for (std::uint64_t m = 0; m < f.entries.size(); ++m) flags = flags && fd[RankSubset(f.n, m).reversed().mask()] == f[m];
    const bool cd = cd_index(d) == cd_index(entry.poset).reversed();
    rec.check(flags && cd, entry.name + ": flag reversal=" + (flags ? "yes" : "no") + " cd reversal=" + (cd ? "yes" : "no"));
  }
}

void round_trip(SuiteResult& res) {
  Recorder rec(res);
  std::mt19937_64 rng(20240611);
  bool inversion = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    FlagVector f(n);
    for (auto& e : f.entries) e = BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000) * BigInt(rng());
    inversion = inversion && flag_f(flag_h(f)) == f && flag_h(flag_f(f)) == f;
  }
  rec.check(inversion, "f <-> h inversion exact on 200 random tables (n <= 8)");
  for (const auto& entry : eulerian_corpus()) {
    const FlagVector f = flag_vector(entry.poset);
    const bool ok = expand_cd_to_ab(cd_from_l(l_vector(f))) == ab_index(flag_h(f));
    rec.check(ok, entry.name + ": cd-index expands to the ab-index");
  }
  for (int r = 2; r <= 7; ++r) {
    bool rejected = false;
    try {
      (void)cd_index(chain(r));
    } catch (const NotCdExpressible&) {
      rejected = true;
    }
    rec.check(rejected, "chain(" + std::to_string(r) + ") rejected as not cd-expressible");
  }
}

struct SuiteDef {
  std::string name;
  int criterion;
  std::string title;
  double time_limit;
  std::function<void(SuiteResult&)> body;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"double-chain", 1, "cd-index of doubled chains is c^n", 1.0, double_chain},
      {"lemma1", 2, "dp(n,{[1,n]},N) has cd-index (N+1)c^n - N(cc-2d)^(n/2)", 10.0, lemma1},
      {"lemma2", 3, "lemma2(7,N) is Eulerian with [dc^3d] = 4(N^2-N^4)", 60.0, lemma2},
      {"lemma3", 4, "lemma3(N) is Eulerian with [ccdcc] = -2(N-1)^2", 60.0, lemma3},
      {"limit-l", 5, "limit L-vectors and limit cd-coefficients", 0.0, limit_l},
      {"inequality", 6, "inequality lemma on the Eulerian corpus", 0.0, inequality},
      {"note-count", 7, "word classes partition cd-words; Part1 count; Fibonacci", 0.0, note_count},
      {"part2", 8, "[c^n] = 1 on the Eulerian corpus", 0.0, part2},
      {"join-mult", 9, "cd-index is multiplicative under join", 0.0, join_mult},
      {"witness", 10, "negative witnesses for Part3 words", 0.0, witness},
      {"boolean-positivity", 11, "Boolean algebras have positive cd-coefficients", 0.0, boolean_positivity},
      {"duality", 12, "duality reverses flags and cd-words", 0.0, duality},
      {"round-trip", 13, "f/h inversion, cd -> ab expansion, chains rejected", 0.0, round_trip},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& def : suites()) {
    if (def.name != name) continue;
    SuiteResult res;
    res.name = def.name;
    res.criterion = def.criterion;
    res.title = def.title;
    res.time_limit = def.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      def.body(res);
    } catch (const std::exception& e) {
      res.passed = false;
      res.rows.push_back(std::string("FAIL exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.time_limit > 0 && res.seconds >= res.time_limit) {
      res.passed = false;
      res.rows.push_back("FAIL runtime " + std::to_string(res.seconds) + " s exceeds " + std::to_string(res.time_limit) + " s");
    }
    return res;
  }
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace eulerian
