#include <random>

#include <gtest/gtest.h>

#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"
#include "eulerian/flag.hpp"
#include "eulerian/verify.hpp"
#include "oracle.hpp"

using namespace eulerian;

namespace {

std::map<std::string, BigInt> as_map(const CdPolynomial& p) {
  std::map<std::string, BigInt> out;
  for (const auto& [w, k] : p.terms()) out[w.letters()] = k;
  return out;
}

}  // namespace

TEST(Subsets, EvenSets) {
  EXPECT_TRUE(is_even_mask(0));
  EXPECT_TRUE(is_even_set(RankSubset(4, {1, 2})));
  EXPECT_TRUE(is_even_set(RankSubset(6, {2, 3, 5, 6})));
  EXPECT_FALSE(is_even_set(RankSubset(3, {1, 2, 3})));
  EXPECT_FALSE(is_even_set(RankSubset(4, {2})));
  EXPECT_TRUE(evenly_contains(RankSubset(4, {}), RankSubset(4, {1, 2})));
  EXPECT_TRUE(evenly_contains(RankSubset(4, {3, 4}), RankSubset(4, {1, 2, 3, 4})));
  EXPECT_FALSE(evenly_contains(RankSubset(4, {2, 3}), RankSubset(4, {1, 2, 3, 4})));
  EXPECT_FALSE(evenly_contains(RankSubset(4, {1, 2}), RankSubset(4, {3, 4})));
}

TEST(Subsets, Basics) {
  const RankSubset s(6, {1, 2, 5});
  EXPECT_EQ(s.to_string(), "[1,2,5]");
  EXPECT_EQ(RankSubset(3, {}).to_string(), "[]");
  EXPECT_EQ(s.reversed(), RankSubset(6, {2, 5, 6}));
  EXPECT_EQ(s.complement(), RankSubset(6, {3, 4, 6}));
  EXPECT_EQ(s.runs(), (std::vector<std::pair<int, int>>{{1, 2}, {5, 5}}));
  EXPECT_THROW(RankSubset(3, {4}), InvalidArgument);
}

TEST(FlagVector, BooleanThree) {
  const FlagVector f = flag_vector(boolean(3));
  EXPECT_EQ(f.entries, (std::vector<BigInt>{1, 3, 3, 6}));
  const FlagHVector h = flag_h(f);
  EXPECT_EQ(h.entries, (std::vector<BigInt>{1, 2, 2, 1}));
  EXPECT_EQ(flag_f(h), f);
  const AbPolynomial ab = ab_index(h);
  EXPECT_EQ(ab.coefficients, h.entries);
  EXPECT_EQ(AbPolynomial::word(2, 1), "ba");
}

TEST(FlagVector, RankOneHasOnlyEmptySet) {
  const FlagVector f = flag_vector(chain(1));
  EXPECT_EQ(f.n, 0);
  EXPECT_EQ(f.entries, (std::vector<BigInt>{1}));
  EXPECT_EQ(cd_index(chain(1)).to_string(), "1");
}

TEST(LVectorTest, BooleanThree) {
  const LVector l = l_vector(flag_vector(boolean(3)));
  EXPECT_EQ(l.entries, (std::vector<Rational>{Rational(3, 2), 0, 0, Rational(-1, 2)}));
}

TEST(CdIndex, Examples) {
  EXPECT_EQ(cd_index(boolean(3)).to_string(), "cc + d");
  EXPECT_EQ(cd_index(boolean(4)).to_string(), "ccc + 2*cd + 2*dc");
  EXPECT_EQ(cd_index(horizontal_double(chain(5))).to_string(), "cccc");
  EXPECT_THROW(cd_index(chain(3)), NotCdExpressible);
}

TEST(CdIndex, BooleanFiveHasKnownCoefficients) {
  const CdPolynomial phi = cd_index(boolean(5));
  EXPECT_EQ(phi.coefficient(CdWord("cccc")), 1);
  EXPECT_EQ(phi.coefficient(CdWord("dcc")), 3);
  EXPECT_EQ(phi.coefficient(CdWord("cdc")), 5);
  EXPECT_EQ(phi.coefficient(CdWord("ccd")), 3);
  EXPECT_EQ(phi.coefficient(CdWord("dd")), 4);
}

TEST(CdWords, CountsAreFibonacci) {
  EXPECT_EQ(cd_words(0).size(), 1U);
  EXPECT_EQ(cd_words(2).size(), 2U);
  EXPECT_EQ(cd_words(4).size(), 5U);
  EXPECT_EQ(cd_words(8).size(), 34U);
  const auto w = cd_words(3);
  EXPECT_EQ(w, (std::vector<CdWord>{CdWord("ccc"), CdWord("cd"), CdWord("dc")}));
}

TEST(CdWords, Basics) {
  EXPECT_THROW(CdWord("cxd"), InvalidArgument);
  const CdWord w("cdcd");
  EXPECT_EQ(w.degree(), 6);
  EXPECT_EQ(w.d_count(), 2);
  EXPECT_EQ(w.support(), RankSubset(6, {2, 3, 5, 6}));
  EXPECT_EQ(w.reversed(), CdWord("dcdc"));
}

TEST(CdPolynomialTest, Arithmetic) {
  CdPolynomial p(2);
  p.add_term(CdWord("cc"), 1);
  p.add_term(CdWord("d"), -2);
  EXPECT_EQ(p.to_string(), "cc - 2*d");
  EXPECT_EQ((p - p).to_string(), "0");
  EXPECT_EQ((p * BigInt(3)).to_string(), "3*cc - 6*d");
  EXPECT_EQ(cd_power(p, 2).to_string(), "cccc - 2*ccd - 2*dcc + 4*dd");
  EXPECT_THROW(p.add_term(CdWord("c"), 1), InvalidArgument);
  const AbPolynomial ab = expand_cd_to_ab(CdPolynomial::monomial(CdWord("d")));
  EXPECT_EQ(ab.coefficients, (std::vector<BigInt>{0, 1, 1, 0}));
}

TEST(FlagProperties, AgreesWithOracleOnRandomPosets) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const RankedPoset p = oracle::random_poset(rng, 6, 3);
    const FlagVector f = flag_vector(p);
    ASSERT_EQ(f.entries, oracle::flag_vector(p));
    EXPECT_EQ(flag_h(f).entries, oracle::flag_h(f.entries));
    EXPECT_EQ(l_vector(f).entries, oracle::l_vector(f.entries, f.n));
  }
}

TEST(FlagProperties, InversionRoundTripsOnRandomTables) {
  std::mt19937_64 rng(13);
  for (int n = 0; n <= 7; ++n) {
    FlagVector f(n);
    for (auto& v : f.entries) v = BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000) * BigInt(rng());
    EXPECT_EQ(flag_f(flag_h(f)), f);
    EXPECT_EQ(flag_h(flag_f(f)), f);
  }
}

TEST(FlagProperties, CdIndexAgreesWithGreedyOracleOnCorpus) {
  for (const auto& entry : eulerian_corpus()) {
    if (entry.poset.rank() > 8) continue;
    std::map<std::string, BigInt> expected;
    ASSERT_TRUE(oracle::cd_index(entry.poset, expected)) << entry.name;
    EXPECT_EQ(as_map(cd_index(entry.poset)), expected) << entry.name;
  }
}

TEST(FlagProperties, CdExpansionReproducesAbIndex) {
  for (const auto& entry : eulerian_corpus()) {
    const FlagVector f = flag_vector(entry.poset);
    EXPECT_EQ(expand_cd_to_ab(cd_index(entry.poset)), ab_index(flag_h(f))) << entry.name;
  }
}

TEST(FlagProperties, DualReversesCdIndex) {
  for (const auto& entry : eulerian_corpus())
    EXPECT_EQ(cd_index(dual(entry.poset)), cd_index(entry.poset).reversed()) << entry.name;
}

TEST(FlagProperties, ConversionSucceedsExactlyWhenGreedyDoes) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    const RankedPoset p = oracle::random_poset(rng, 5, 2);
    std::map<std::string, BigInt> phi;
    const bool expressible = oracle::cd_index(p, phi);
    if (oracle::is_eulerian(p)) ASSERT_TRUE(expressible);
    if (expressible)
      EXPECT_EQ(as_map(cd_index(p)), phi);
    else
      EXPECT_THROW(cd_index(p), NotCdExpressible);
  }
}
