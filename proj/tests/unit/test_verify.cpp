#include <gtest/gtest.h>

#include "tbn/error.hpp"
#include "tbn/verify.hpp"

using namespace tbn;

class ArtinTits : public ::testing::TestWithParam<int> {};

TEST_P(ArtinTits, ArtinSuite) {
  const auto rep = run_suite("artin", GetParam(), 60, 13);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
}

TEST_P(ArtinTits, TitsSuite) {
  const auto rep = run_suite("tits", GetParam(), 60, 19);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
}

INSTANTIATE_TEST_SUITE_P(Strands, ArtinTits, ::testing::Values(2, 3, 4, 5, 6, 7, 8));

TEST(Suites, AllAggregatesWithPrefixes) {
  const auto rep = run_suite("all", 5, 20, 0);
  EXPECT_TRUE(rep.ok());
  for (const auto &name : suite_names()) {
    bool seen = false;
    for (const auto &[id, c] : rep.checks)
      seen = seen || id.rfind(name + "/", 0) == 0;
    EXPECT_TRUE(seen) << name;
  }
}

TEST(Suites, DeterministicInSeed) {
  EXPECT_EQ(run_suite("quotient", 5, 20, 4).checks, run_suite("quotient", 5, 20, 4).checks);
}

TEST(Suites, RejectsUnknownNamesAndSmallN) {
  EXPECT_FALSE(is_suite("bogus"));
  EXPECT_THROW(run_suite("bogus", 5, 1, 0), InputError);
  EXPECT_THROW(run_suite("quotient", 3, 1, 0), InputError);
}

TEST(RandomHelpers, PureWordsArePure) {
  auto rng = make_rng(1);
  for (int c = 0; c < 50; ++c)
    EXPECT_TRUE(psi(random_pure_word(rng, 6, 30)).is_identity());
}

TEST(RandomHelpers, ReducedLiftsAreReduced) {
  auto rng = make_rng(8);
  for (int c = 0; c < 50; ++c) {
    const Perm p = random_perm(rng, 7);
    const BraidWord w = random_reduced_lift(rng, p);
    EXPECT_EQ(psi(w), p);
    EXPECT_EQ(static_cast<std::int64_t>(w.size()), p.inversions());
  }
}
