#include <random>

#include <gtest/gtest.h>

#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"
#include "eulerian/flag.hpp"
#include "eulerian/poset.hpp"
#include "oracle.hpp"

using namespace eulerian;

namespace {

bool has_diag(const std::vector<std::string>& diags, const std::string& needle) {
  for (const auto& d : diags)
    if (d.find(needle) != std::string::npos) return true;
  return false;
}

std::vector<RankedPoset> sample_posets() {
  std::vector<RankedPoset> out{chain(1), chain(3), chain(5), boolean(3), boolean(4),
                               horizontal_double(chain(4)), lemma3_poset(2),
                               dp_poset(4, IntervalSystem{4, {{1, 2}, {3, 4}}}, 2)};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) out.push_back(oracle::random_poset(rng));
  return out;
}

}  // namespace

TEST(Chain, SmallestBoundedPoset) {
  const RankedPoset p = chain(1);
  EXPECT_EQ(p.level_sizes(), (std::vector<std::size_t>{1, 1}));
  ASSERT_EQ(p.covers(0).size(), 1U);
  EXPECT_EQ(p.covers(0)[0], (Cover{0, 0}));
}

TEST(Chain, EveryFlagNumberIsOne) {
  const FlagVector f = flag_vector(chain(5));
  EXPECT_EQ(f.n, 4);
  for (const auto& v : f.entries) EXPECT_EQ(v, 1);
}

TEST(Chain, RankThreeIsNotEulerian) {
  const EulerianReport report = is_eulerian(chain(3));
  EXPECT_FALSE(report.eulerian);
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_NE(report.violation->even_count, report.violation->odd_count);
  EXPECT_FALSE(oracle::is_eulerian(chain(3)));
}

TEST(Chain, RejectsRankBelowOne) { EXPECT_THROW(chain(0), InvalidArgument); }

TEST(Boolean, RankOneIsChain) { EXPECT_EQ(boolean(1), chain(1)); }

TEST(Boolean, RankThreeLevelsAndFlags) {
  const RankedPoset b = boolean(3);
  EXPECT_EQ(b.level_sizes(), (std::vector<std::size_t>{1, 3, 3, 1}));
  const FlagVector f = flag_vector(b);
  EXPECT_EQ(f.at(RankSubset(2, {1})), 3);
  EXPECT_EQ(f.at(RankSubset(2, {2})), 3);
  EXPECT_EQ(f.at(RankSubset(2, {1, 2})), 6);
  EXPECT_EQ(oracle::flag_vector(b), f.entries);
  EXPECT_TRUE(is_eulerian(b));
  EXPECT_TRUE(oracle::is_eulerian(b));
}

TEST(Boolean, BudgetAndArgumentErrors) {
  EXPECT_THROW(boolean(0), InvalidArgument);
  set_element_budget(100);
  EXPECT_THROW(boolean(7), ResourceLimit);
  EXPECT_NO_THROW(boolean(6));
  set_element_budget(kDefaultElementBudget);
}

TEST(Dual, ChainAndBooleanAreSelfDual) {
  EXPECT_EQ(dual(chain(4)), chain(4));
  const RankedPoset d = dual(boolean(3));
  EXPECT_EQ(d.level_sizes(), (std::vector<std::size_t>{1, 3, 3, 1}));
  const FlagVector f = flag_vector(boolean(3));
  const FlagVector fd = flag_vector(d);
  for (std::uint64_t m = 0; m < 4; ++m) EXPECT_EQ(fd[RankSubset(2, m).reversed().mask()], f[m]);
}

TEST(Validate, ReportsViolations) {
  EXPECT_TRUE(validate(chain(3)).empty());

  auto covers = chain(3).all_covers();
  covers[1].clear();
  const auto diags = validate(RankedPoset(3, {1, 1, 1, 1}, covers));
  EXPECT_TRUE(has_diag(diags, "dangling element"));

  const RankedPoset two_bottoms(1, {2, 1}, {CoverList{{0, 0}, {1, 0}}});
  EXPECT_TRUE(has_diag(validate(two_bottoms), "no unique bottom"));

  const RankedPoset bad_index(1, {1, 1}, {CoverList{{0, 3}}});
  EXPECT_TRUE(has_diag(validate(bad_index), "missing element"));
  EXPECT_THROW(require_valid(bad_index), InvalidArgument);
}

TEST(Comparability, Examples) {
  const RankedPoset b = boolean(3);
  EXPECT_EQ(comparability(b, 2, 2), BitMatrix::identity(3));
  const BitMatrix m = comparability(b, 1, 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m.row_count(i), 2U);
  const BitMatrix t = m.transposed();
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.row_count(j), 2U);
  const BitMatrix whole = comparability(b, 0, 3);
  EXPECT_EQ(whole.rows(), 1U);
  EXPECT_TRUE(whole.test(0, 0));
  EXPECT_THROW(comparability(b, 2, 1), InvalidArgument);
  EXPECT_THROW(comparability(b, 0, 4), InvalidArgument);
}

TEST(Comparability, MatchesNaiveClosure) {
  for (const auto& p : sample_posets()) {
    const oracle::Flat flat = oracle::flatten(p);
    const Reachability reach(p);
    for (int r1 = 0; r1 <= p.rank(); ++r1)
      for (int r2 = r1; r2 <= p.rank(); ++r2)
        for (std::size_t i = 0; i < p.level_size(r1); ++i)
          for (std::size_t j = 0; j < p.level_size(r2); ++j) {
            const int x = flat.by_rank[static_cast<std::size_t>(r1)][i];
            const int y = flat.by_rank[static_cast<std::size_t>(r2)][j];
            ASSERT_EQ(reach.up(r1, r2).test(i, j), flat.leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
          }
  }
}

TEST(MaximalChains, Examples) {
  EXPECT_EQ(count_maximal_chains(chain(6)), 1);
  EXPECT_EQ(count_maximal_chains(boolean(3)), 6);
  EXPECT_EQ(count_maximal_chains(dp_poset(4, IntervalSystem{4, {{1, 4}}}, 3)), 48);
}

TEST(Eulerian, Examples) {
  EXPECT_TRUE(is_eulerian(horizontal_double(chain(3))));
  EXPECT_TRUE(is_eulerian(lemma2_poset(7, 2)));
}

// Properties over generated posets.

TEST(PosetProperties, GeneratedPosetsAreValid) {
  for (const auto& p : sample_posets()) EXPECT_TRUE(validate(p).empty());
}

TEST(PosetProperties, DualIsAnInvolution) {
  for (const auto& p : sample_posets()) EXPECT_EQ(dual(dual(p)), p);
}

TEST(PosetProperties, ComparabilityComposes) {
  for (const auto& p : sample_posets()) {
    for (int r1 = 0; r1 <= p.rank(); ++r1)
      for (int r2 = r1; r2 <= p.rank(); ++r2)
        for (int r3 = r2; r3 <= p.rank(); ++r3)
          EXPECT_EQ(comparability(p, r1, r3), comparability(p, r1, r2) * comparability(p, r2, r3));
  }
}

TEST(PosetProperties, DualityPreservesChainsAndEulerianness) {
  for (const auto& p : sample_posets()) {
    EXPECT_EQ(count_maximal_chains(p), count_maximal_chains(dual(p)));
    EXPECT_EQ(is_eulerian(p).eulerian, is_eulerian(dual(p)).eulerian);
  }
}

TEST(PosetProperties, EulerianCheckMatchesBruteForce) {
  for (const auto& p : sample_posets()) {
    const bool euler = is_eulerian(p).eulerian;
    EXPECT_EQ(euler, oracle::is_eulerian(p));
    if (euler) {
      long long balance = 0;
      for (int r = 0; r <= p.rank(); ++r)
        balance += (r % 2 == 0 ? 1 : -1) * static_cast<long long>(p.level_size(r));
      EXPECT_EQ(balance, 0);
    }
  }
}

TEST(PosetProperties, MaximalChainsEqualTopFlagNumber) {
  for (const auto& p : sample_posets()) {
    const auto f = oracle::flag_vector(p);
    EXPECT_EQ(count_maximal_chains(p), f.back());
  }
}
