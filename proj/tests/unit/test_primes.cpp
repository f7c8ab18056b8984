#include <gtest/gtest.h>

#include "tbn/error.hpp"
#include "tbn/primes.hpp"
#include "tbn/quotient.hpp"
#include "tbn/verify.hpp"

using namespace tbn;

static_assert(ActionGroup<GnInstance>);

TEST(GnInstance, Generators) {
  EXPECT_EQ(GnInstance(5).generators().size(), 6u);
  const auto g0 = GnInstance(5, true).generators();
  EXPECT_EQ(g0.size(), 5u);
  for (const auto &g : g0)
    EXPECT_EQ(g.vec[0], 0);
  EXPECT_FALSE(GnInstance(5, true).contains(GnElement::s1(5)));
}

TEST(GnInstance, DegreeZeroIsClosed) {
  auto rng = make_rng(2);
  const GnInstance g0(6, true);
  for (int c = 0; c < 50; ++c) {
    GnElement a = random_element(rng, 6), b = random_element(rng, 6);
    a.vec[0] = b.vec[0] = 0;
    EXPECT_TRUE(g0.contains(g0.mul(a, g0.inv(b))));
    EXPECT_TRUE(g0.contains(apply_word(g0, a, random_word(rng, 6, 10))));
  }
}

TEST(CanonicalPrime, Shape) {
  for (int n = 4; n <= 7; ++n) {
    const auto pair = canonical_prime(n);
    EXPECT_EQ(pair.tau, GnElement::nu(n));
    EXPECT_EQ(pair.h.vec[0], 0);
    EXPECT_EQ(pair.ht, HalfTwist::frame(1, n));
    EXPECT_EQ(pair.h, GnElement::u(1, n).inverse() * GnElement::nu(n));
  }
  EXPECT_THROW(canonical_prime(3), InputError);
}

TEST(CanonicalPrime, ConjugatedVariantIsPrimeOnConjugatedSupport) {
  const int n = 5;
  const GnInstance grp(n);
  const auto pair = canonical_prime(n);
  const BraidWord b(n, {2});
  const GnElement h2 = apply_word(grp, pair.h, b);
  EXPECT_EQ(h2, Quotient(n).lambda(BraidWord(n, {1, 1, -2, -2})));
  const HalfTwist t = ht_conjugate(pair.ht, b);
  EXPECT_EQ(ht_word(t), BraidWord(n, {-2, 1, 2}));
  std::vector<HalfTwist> samples;
  for (int i = 1; i < n; ++i)
    samples.push_back(ht_conjugate(HalfTwist::frame(i, n), b));
  EXPECT_TRUE(axiom_spot_check(grp, h2, t, pair.tau, samples).passed());
}

TEST(PrimeFrame, PassesOnCanonicalPrime) {
  for (int n = 4; n <= 7; ++n) {
    const GnInstance grp(n);
    const auto pair = canonical_prime(n);
    const auto rep = check_prime_frame(grp, pair.h, pair.tau);
    EXPECT_EQ(rep.verdict, Verdict::Pass) << rep.failed;
    EXPECT_TRUE(rep.failed.empty());
  }
}

TEST(PrimeFrame, NamesTheFailingCondition) {
  const int n = 5;
  const GnInstance grp(n);
  const auto pair = canonical_prime(n);
  const GnElement nu = GnElement::nu(n);
  EXPECT_EQ(check_prime_frame(grp, pair.h, grp.identity()).failed, "1");
  EXPECT_EQ(check_prime_frame(grp, GnElement::u(1, n) * GnElement::u(2, n), nu).failed, "1");
  EXPECT_EQ(check_prime_frame(grp, GnElement::u(3, n), nu).failed, "1");
  // Multiplying by nu keeps condition (1) but breaks the adjacency conditions.
  EXPECT_EQ(check_prime_frame(grp, pair.h * nu, nu).failed, "2a");
  // tau = nu * s_1 is not of order two.
  EXPECT_EQ(check_prime_frame(grp, pair.h, nu * GnElement::s1(n)).failed, "1");
  const auto tau_s1 = check_prime_frame(grp, pair.h, nu * GnElement::s1(n));
  EXPECT_FALSE(tau_s1.conditions.at("1:tau^2"));
  EXPECT_THROW(check_prime_frame(GnInstance(3), GnElement::u(1, 3), GnElement::nu(3)),
               InputError);
}

TEST(OrbitCriterion, CanonicalPrimeInDegreeZero) {
  const GnInstance g0(5, true);
  const auto rep = check_orbit_criterion(g0, canonical_prime(5).h, OrbitOptions{3, 2});
  EXPECT_EQ(rep.verdict, Verdict::PassUpToBound);
  EXPECT_EQ(rep.bound, 3);
  EXPECT_EQ(rep.conditions.size(), 7u);
}

TEST(OrbitCriterion, Failures) {
  const GnInstance g0(5, true);
  EXPECT_EQ(check_orbit_criterion(g0, GnElement::nu(5)).failed, "0");
  EXPECT_EQ(check_orbit_criterion(g0, GnElement::s1(5)).failed, "1a");
  EXPECT_EQ(check_orbit_criterion(GnInstance(5), GnElement::s1(5)).failed, "1a");
  EXPECT_THROW(check_orbit_criterion(GnInstance(4, true), GnElement::u(1, 4)), InputError);
}

TEST(OrbitCriterion, BoundedOrbitGrows) {
  const GnInstance grp(5);
  const auto h = canonical_prime(5).h;
  EXPECT_EQ(bounded_orbit(grp, h, 0).size(), 1u);
  EXPECT_LE(bounded_orbit(grp, h, 1).size(), bounded_orbit(grp, h, 2).size());
}

TEST(Transport, FrameFamily) {
  for (int n = 4; n <= 6; ++n) {
    const GnInstance grp(n);
    const auto unit = make_pair(grp, GnElement::u(1, n), HalfTwist::frame(1, n));
    EXPECT_EQ(unit.tau, GnElement::nu(n));
    const auto canon = canonical_prime(n);
    for (int j = 1; j < n; ++j) {
      EXPECT_EQ(transport(grp, unit, HalfTwist::frame(j, n)), GnElement::u(j, n));
      EXPECT_EQ(transport(grp, canon, HalfTwist::frame(j, n)),
                GnElement::u(j, n).inverse() * GnElement::nu(n));
    }
  }
}

TEST(Transport, WordCarriesEndpointsInOrder) {
  auto rng = make_rng(9);
  const int n = 6;
  for (int c = 0; c < 40; ++c) {
    const HalfTwist s{random_word(rng, n, 8), 1 + c % (n - 1), c % 3 == 0};
    const HalfTwist t{random_word(rng, n, 8), 1 + (c * 7) % (n - 1), c % 2 == 0};
    const BraidWord b = transport_word(s, t);
    EXPECT_TRUE(bn_equal(conjugate(ht_word(s), b), ht_word(t)));
    EXPECT_EQ(ht_endpoints(ht_conjugate(s, b)), ht_endpoints(t));
  }
}

TEST(Transport, AntiCoherentPairReturnsInverseTimesTau) {
  const int n = 5;
  const GnInstance grp(n);
  const auto pair = canonical_prime(n);
  EXPECT_EQ(transport(grp, pair, HalfTwist::frame(1, n, true)),
            grp.mul(grp.inv(pair.h), pair.tau));
}

TEST(AxiomSpotCheck, FrameSamples) {
  const int n = 5;
  const GnInstance grp(n);
  const auto pair = canonical_prime(n);
  const auto adjacent =
      axiom_spot_check(grp, pair.h, pair.ht, pair.tau, {HalfTwist::frame(2, n)});
  EXPECT_TRUE(adjacent.passed());
  EXPECT_TRUE(adjacent.conditions.at("2a") && adjacent.conditions.at("2b"));
  const auto far = axiom_spot_check(grp, pair.h, pair.ht, pair.tau, {HalfTwist::frame(4, n)});
  EXPECT_TRUE(far.conditions.at("3"));
  // A half-twist transversal to X_4 whose endpoints avoid the support.
  const GnInstance grp6(6);
  const auto pair6 = canonical_prime(6);
  const HalfTwist away{BraidWord(6, {3, 5}), 4, false};
  EXPECT_EQ(classify_pair(HalfTwist::frame(4, 6), away).label(), "unclassified");
  const auto trans = axiom_spot_check(grp6, pair6.h, pair6.ht, pair6.tau, {away});
  EXPECT_TRUE(trans.passed());
  EXPECT_TRUE(trans.conditions.count("3"));
}

TEST(AxiomSpotCheck, DetectsANonPrime) {
  const int n = 5;
  const GnInstance grp(n);
  const auto bad = axiom_spot_check(grp, GnElement::u(1, n) * GnElement::u(3, n),
                                    HalfTwist::frame(1, n), GnElement::nu(n),
                                    {HalfTwist::frame(2, n), HalfTwist::frame(3, n)});
  EXPECT_FALSE(bad.passed());
}

TEST(IdentitySuite, PassesOnPrimesAndFailsOtherwise) {
  for (int n = 4; n <= 7; ++n) {
    const GnInstance grp(n);
    const auto rep = prime_identity_suite(grp, canonical_prime(n), 30, 41);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.checks.at("xi-frame").second, 30);
  }
  const GnInstance grp(5);
  const PolarizedPair<GnElement> fake{GnElement::u(1, 5) * GnElement::u(2, 5),
                                      HalfTwist::frame(1, 5), GnElement::nu(5)};
  EXPECT_FALSE(prime_identity_suite(grp, fake, 10, 1).ok());
}

TEST(IdentitySuite, DeterministicInSeed) {
  const GnInstance grp(5);
  const auto a = prime_identity_suite(grp, canonical_prime(5), 10, 99);
  const auto b = prime_identity_suite(grp, canonical_prime(5), 10, 99);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.seed, 99u);
}

TEST(PrimesSuite, AllStrandCounts) {
  for (int n = 4; n <= 7; ++n) {
    const auto rep = run_suite("primes", n, 50, 7);
    EXPECT_TRUE(rep.ok()) << n << " " << (rep.failures.empty() ? "" : rep.failures.front());
  }
}
