#include <gtest/gtest.h>

#include "eulerian/analysis.hpp"
#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"
#include "eulerian/flag.hpp"
#include "eulerian/verify.hpp"
#include "oracle.hpp"

using namespace eulerian;

namespace {

IntervalSystem sys(int n, std::vector<RankInterval> iv) { return IntervalSystem{n, std::move(iv)}; }

// L_S over the subfamilies of `s`, enumerated independently of the library.
std::map<std::uint64_t, std::int64_t> naive_limit(const IntervalSystem& s) {
  std::map<std::uint64_t, std::int64_t> out;
  const std::size_t k = s.intervals.size();
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << k); ++fam) {
    std::uint64_t u = 0;
    int size = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((fam >> i) & 1U) {
        u |= s.as_subset(i).mask();
        ++size;
      }
    out[u] += size % 2 == 0 ? 1 : -1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<IntervalSystem> even_systems_up_to_two(int n) {
  std::vector<RankInterval> ivs;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; hi += 2) ivs.push_back({lo, hi});
  std::vector<IntervalSystem> out;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    out.push_back(sys(n, {ivs[i]}));
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      IntervalSystem s = sys(n, {ivs[i], ivs[j]});
      if (validate_even_interval_system(s).empty()) out.push_back(s);
    }
  }
  return out;
}

}  // namespace

TEST(LimitL, SingleInterval) {
  const LimitLVector l = limit_l_vector(sys(4, {{1, 4}}));
  EXPECT_EQ(l.entries, (std::map<std::uint64_t, std::int64_t>{{0, 1}, {0b1111, -1}}));
  EXPECT_EQ(l.at(RankSubset(4, {1, 2})), 0);
}

TEST(LimitL, OverlappingIntervalsCancel) {
  const LimitLVector l = limit_l_vector(sys(3, {{1, 2}, {2, 3}, {1, 3}}), 20);
  EXPECT_EQ(l.entries, naive_limit(sys(3, {{1, 2}, {2, 3}, {1, 3}})));
  EXPECT_EQ(l.at(0b111), 1);
}

TEST(LimitL, TooManyIntervals) {
  IntervalSystem s{8, {}};
  for (int i = 1; i <= 7; ++i) s.intervals.push_back({i, i + 1});
  EXPECT_THROW(limit_l_vector(s, 6), ResourceLimit);
  EXPECT_NO_THROW(limit_l_vector(s, 7));
}

TEST(LimitL, MatchesNaiveEnumeration) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : even_systems_up_to_two(n)) EXPECT_EQ(limit_l_vector(s).entries, naive_limit(s));
}

TEST(LimitL, CoefficientAtDPositionsIsPowerOfTwo) {
  EXPECT_EQ(limit_cd_coefficient(CdWord("dd"), d_position_system(CdWord("dd"))), 4);
  EXPECT_EQ(limit_cd_coefficient(CdWord("dcccd"), d_position_system(CdWord("dcccd"))), 4);
  EXPECT_EQ(d_position_system(CdWord("cdcd")).intervals, (std::vector<RankInterval>{{2, 3}, {5, 6}}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : cd_words(n))
      EXPECT_EQ(limit_cd_coefficient(w, d_position_system(w)), pow2(static_cast<unsigned>(w.d_count())))
          << w.letters();
}

TEST(LimitL, SumIsEntrywise) {
  const LimitLVector a = limit_l_vector(sys(6, {{1, 2}, {2, 6}}));
  const LimitLVector b = limit_l_vector(sys(6, {{1, 5}, {5, 6}}));
  const LimitLVector s = a + b;
  for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(s.at(m), a.at(m) + b.at(m));
}

// Finite constructions approach the limit table as N grows.
TEST(LimitL, FiniteConstructionsApproachLimit) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : even_systems_up_to_two(n)) {
      const LimitLVector limit = limit_l_vector(s);
      std::vector<std::vector<Rational>> dev(4);
      for (std::uint64_t big_n = 1; big_n <= 4; ++big_n) {
        const LVector l = l_vector(flag_vector(dp_poset(n, s, big_n)));
        BigInt norm = 1;
        for (std::size_t i = 0; i < s.intervals.size(); ++i) norm *= big_n;
        for (std::uint64_t q = 0; q < l.entries.size(); ++q) {
          const Rational d = l[q] / Rational(norm) - Rational(limit.at(q));
          dev[big_n - 1].push_back(d < 0 ? Rational(-d) : d);
        }
      }
      for (std::uint64_t q = 0; q < dev[0].size(); ++q) {
        for (std::size_t i = 1; i < 4; ++i) EXPECT_LE(dev[i][q], dev[i - 1][q]) << n << " q=" << q;
        if (limit.at(q) != 0 && dev[0][q] != 0) EXPECT_LT(dev[3][q], dev[0][q]) << n << " q=" << q;
      }
    }
}

TEST(Inequality, Examples) {
  const FlagVector fb = flag_vector(boolean(3));
  const RankSubset t(2, {1}), v(2, {1, 2});
  ASSERT_TRUE(inequality_precondition(t, v));
  EXPECT_EQ(inequality_f_form(fb, t, v), 1);
  EXPECT_EQ(inequality_l_form(l_vector(fb), t, v), Rational(1, 2));
  EXPECT_EQ(inequality_f_form(flag_vector(chain(3)), t, v), -1);
}

TEST(Inequality, Precondition) {
  EXPECT_TRUE(inequality_precondition(RankSubset(5, {1, 4}), RankSubset(5, {1, 2, 4, 5})));
  EXPECT_FALSE(inequality_precondition(RankSubset(5, {1, 2}), RankSubset(5, {1, 2, 4})));
  EXPECT_FALSE(inequality_precondition(RankSubset(5, {3}), RankSubset(5, {1, 2})));
  for (const auto& [t, v] : inequality_pairs(4)) EXPECT_TRUE(inequality_precondition(t, v));
}

TEST(Inequality, FormsAgreeUpToPowerOfTwo) {
  for (const auto& entry : eulerian_corpus()) {
    const FlagVector f = flag_vector(entry.poset);
    const LVector l = l_vector(f);
    for (const auto& [t, v] : inequality_pairs(f.n)) {
      const BigInt ff = inequality_f_form(f, t, v);
      const Rational lf = inequality_l_form(l, t, v);
      EXPECT_GE(ff, 0) << entry.name;
      EXPECT_GE(lf, 0) << entry.name;
      EXPECT_EQ(Rational(ff), lf * Rational(pow2(static_cast<unsigned>(f.n - (v - t).size())))) << entry.name;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_word(CdWord("cccc")).tag, WordClassTag::Part2);
  EXPECT_EQ(classify_word(CdWord("dccc")).tag, WordClassTag::Part1a);
  EXPECT_EQ(classify_word(CdWord("ccdc")).tag, WordClassTag::Part1a);
  EXPECT_EQ(classify_word(CdWord("dcd")).tag, WordClassTag::Part1b);
  EXPECT_EQ(classify_word(CdWord("cdcdcdc")).tag, WordClassTag::Part1b);
  const WordClass a = classify_word(CdWord("ccdcc"));
  EXPECT_EQ(a.tag, WordClassTag::Part3);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->subword, CdWord("ccdcc"));
  EXPECT_FALSE(a.witness->gap.has_value());
  const WordClass b = classify_word(CdWord("cdccdcd"));
  ASSERT_EQ(b.tag, WordClassTag::Part3);
  EXPECT_EQ(b.witness->subword, CdWord("dccd"));
  EXPECT_EQ(b.witness->offset, 1U);
  EXPECT_EQ(b.witness->gap, 2);
  EXPECT_EQ(classify_word(CdWord("dd")).witness->gap, 0);
  EXPECT_EQ(to_string(WordClassTag::Part1b), "Part1b");
}

TEST(Classify, PartCounts) {
  EXPECT_EQ(count_part1_words(5), 5);
  EXPECT_EQ(count_part1_words(7), 7);
  EXPECT_EQ(count_part1_words(8), 9);
  for (int n = 5; n <= 10; ++n) EXPECT_EQ(count_part1_words(n), part1_count_formula(n)) << n;
}

TEST(Classify, ExactlyOneClassAndMirrorSymmetry) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& w : cd_words(n)) {
      const WordClass c = classify_word(w);
      EXPECT_EQ(c.tag == WordClassTag::Part2, w == CdWord::c_power(n));
      EXPECT_EQ(c.witness.has_value(), c.tag == WordClassTag::Part3);
      EXPECT_EQ(c.certificate.has_value(), c.tag == WordClassTag::Part1a || c.tag == WordClassTag::Part1b);
      EXPECT_EQ(c.tag == WordClassTag::Part3, classify_word(w.reversed()).tag == WordClassTag::Part3) << w.letters();
    }
}

TEST(Certificate, Examples) {
  const Certificate a = nonneg_certificate(CdWord("dccc"));
  EXPECT_EQ(a.s, RankSubset(5, {}));
  EXPECT_EQ(a.t, RankSubset(5, {1}));
  EXPECT_EQ(a.v, RankSubset::full(5));
  const Certificate b = nonneg_certificate(CdWord("cdcc"));
  EXPECT_EQ(b.s, RankSubset(5, {1}));
  EXPECT_EQ(b.t, RankSubset(5, {2}));
  EXPECT_EQ(b.v, RankSubset(5, {2, 3, 4, 5}));
  EXPECT_EQ(b.r, 1);
  EXPECT_THROW(nonneg_certificate(CdWord("ccdcc")), InvalidArgument);
  EXPECT_THROW(nonneg_certificate(CdWord("ccc")), InvalidArgument);
}

TEST(Certificate, SoundOnCorpus) {
  const auto corpus = eulerian_corpus();
  for (int n = 2; n <= 8; ++n)
    for (const auto& w : cd_words(n)) {
      const WordClass c = classify_word(w);
      if (!c.certificate) continue;
      const Certificate& cert = *c.certificate;
      EXPECT_TRUE(inequality_precondition(cert.t, cert.v)) << w.letters();
      EXPECT_EQ(cert.v, cert.s.complement()) << w.letters();
      EXPECT_EQ(cert.r, w.d_count());
      for (const auto& entry : corpus) {
        if (entry.poset.rank() != n + 1) continue;
        const LVector l = l_vector(flag_vector(entry.poset));
        const Rational sum = certificate_sum(l, cert);
        EXPECT_EQ(sum, Rational(cd_index(entry.poset).coefficient(w))) << w.letters() << " on " << entry.name;
        EXPECT_GE(sum, 0);
      }
    }
}

TEST(Witness, RejectsNonPart3Words) {
  EXPECT_THROW(negative_witness(CdWord("dcd"), 2), InvalidArgument);
  EXPECT_THROW(negative_witness(CdWord("dd"), 0), InvalidArgument);
}

TEST(Witness, CoefficientMatchesBruteForce) {
  for (const char* word : {"dd", "cdd", "ddc", "ccdcc", "dccd"})
    for (std::uint64_t big_n = 1; big_n <= 3; ++big_n) {
      const NegativeWitness nw = negative_witness(CdWord(word), big_n);
      EXPECT_EQ(nw.poset.rank(), nw.word.degree() + 1);
      EXPECT_TRUE(oracle::is_eulerian(nw.poset)) << word;
      std::map<std::string, BigInt> phi;
      ASSERT_TRUE(oracle::cd_index(nw.poset, phi)) << word;
      EXPECT_EQ(nw.coefficient, phi.count(word) != 0U ? phi[word] : BigInt(0)) << word << " N=" << big_n;
    }
}

TEST(Witness, ContextDegrees) {
  const NegativeWitness nw = negative_witness(CdWord("cdccdcd"), 2);
  EXPECT_EQ(nw.prefix_degree, 1);
  EXPECT_EQ(nw.suffix_degree, 3);
  EXPECT_EQ(nw.bad.subword, CdWord("dccd"));
}

TEST(Witness, UnboundedBelow) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& w : cd_words(n)) {
      if (classify_word(w).tag != WordClassTag::Part3) continue;
      const BigInt a = negative_witness(w, 2).coefficient;
      const BigInt b = negative_witness(w, 3).coefficient;
      EXPECT_LT(a, 0) << w.letters();
      EXPECT_LT(b, a) << w.letters();
    }
}
