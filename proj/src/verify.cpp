#include "tbn/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tbn/error.hpp"
#include "tbn/quotient.hpp"
#include "tbn/text.hpp"

namespace tbn {

Perm random_perm(std::mt19937_64 &rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

BraidWord random_reduced_lift(std::mt19937_64 &rng, const Perm &p) {
  const int n = p.n();
  Perm q = p;
  std::vector<int> down;
  while (!q.is_identity()) {
    std::vector<int> descents;
    for (int i = 1; i < n; ++i)
      if (!q.ascent(i))
        descents.push_back(i);
    const int i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    down.push_back(i);
    q = q.times_transposition(i);
  }
  std::reverse(down.begin(), down.end());
  return BraidWord(n, std::move(down));
}

BraidWord random_pure_word(std::mt19937_64 &rng, int n, int max_length) {
  const BraidWord w = random_word(rng, n, max_length);
  return w * tits_lift(psi(w)).inverse();
}

GnElement random_element(std::mt19937_64 &rng, int n, int spread) {
  std::uniform_int_distribution<std::int64_t> coord(-spread, spread);
  GnElement g = GnElement::identity(n);
  g.bit = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
  for (auto &v : g.vec)
    v = coord(rng);
  return g;
}

namespace {

using Rng = std::mt19937_64;

std::string show(const BraidWord &w) { return "[" + text::format_word(w) + "]"; }
std::string show(const GnElement &g) { return text::format_element(g); }

FreeWord descending_product(const std::vector<FreeWord> &xs) {
  FreeWord p(static_cast<int>(xs.size()));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    p = p * *it;
  return p;
}

BraidWord full_twist(int n) {
  std::vector<int> sweep(n - 1);
  std::iota(sweep.begin(), sweep.end(), 1);
  return BraidWord(n, sweep).pow(n);
}

void suite_artin(SuiteReport &rep, int n, int cases, Rng &rng) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) >= 2)
        rep.record("far-commutation", bn_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
      if (j == i + 1)
        rep.record("triple-relation",
                   bn_equal(BraidWord(n, {i, j, i}), BraidWord(n, {j, i, j})));
    }
  const auto start = descending_product(identity_images(n));
  const BraidWord delta2 = full_twist(n);
  for (int c = 0; c < cases; ++c) {
    const BraidWord w = random_word(rng, n, 50);
    rep.record("descending-product", descending_product(artin_images(w)) == start, show(w));
    rep.record("inverse-trivial", bn_trivial(w * w.inverse()), show(w));
    const BraidWord v = random_word(rng, n, 20);
    rep.record("psi-homomorphism", psi(w * v) == psi(w) * psi(v), show(w));
    rep.record("exponent-sum-additive",
               exponent_sum(w * v) == exponent_sum(w) + exponent_sum(v), show(w));
    rep.record("full-twist-central", bn_equal(delta2 * v, v * delta2), show(v));

    const BraidWord p = random_pure_word(rng, n, 20);
    const BraidWord q = random_pure_word(rng, n, 20);
    const IntMatrix lp = linking_matrix(p), lq = linking_matrix(q), lpq = linking_matrix(p * q);
    bool additive = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        additive = additive && lpq[a][b] == lp[a][b] + lq[a][b];
    rep.record("linking-additive", additive, show(p));
    const IntMatrix lc = linking_matrix(conjugate(p, v));
    const Perm back = psi(v.inverse());
    bool relabel = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabel = relabel && lc[a][b] == lp[back(a + 1) - 1][back(b + 1) - 1];
    rep.record("linking-conjugation", relabel, show(p));
  }
  // The centralizer generators of X_1 commute with it.
  const BraidWord x1(n, {1});
  for (const auto &z : polarized_centralizer_generators(1, n))
    rep.record("centralizer-commutes", bn_trivial(commutator(z, x1)), show(z));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rep.record("z-ij-forms-agree", bn_equal(z_ij(i, j, n), z_ij_consecutive(i, j, n)));
      const auto [a, b] = ht_endpoints(z_half_twist(i, j, n));
      rep.record("z-ij-endpoints", std::min(a, b) == i && std::max(a, b) == j);
    }
}

void suite_tits(SuiteReport &rep, int n, int cases, Rng &rng) {
  auto check = [&](const Perm &p) {
    const BraidWord t = tits_lift(p);
    const std::string tag = show(t);
    rep.record("lift-section", psi(t) == p, tag);
    rep.record("lift-length", static_cast<std::int64_t>(t.size()) == p.inversions(), tag);
    rep.record("reduced-word-independence", bn_equal(t, random_reduced_lift(rng, p)), tag);
    rep.record("sweep-independence", bn_equal(t, tits_lift(p, true)), tag);
    rep.record("inverse-length", p.inversions() == p.inverse().inversions(), tag);
    for (int i = 1; i < n; ++i)
      if (p.ascent(i)) {
        const Perm q = p.times_transposition(i);
        rep.record("length-additivity",
                   q.inversions() == p.inversions() + 1 &&
                       bn_equal(tits_lift(q), t * BraidWord(n, {i})),
                   tag);
      }
  };
  if (n <= 5) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do
      check(Perm(img));
    while (std::next_permutation(img.begin(), img.end()));
  }
  for (int c = 0; c < cases; ++c)
    check(random_perm(rng, n));
}

void suite_gn_presentation(SuiteReport &rep, int n, int cases, Rng &rng) {
  const GnElement one = GnElement::identity(n), nu = GnElement::nu(n), s1 = GnElement::s1(n);
  const QForm q(n);
  rep.record("nu-order-two", nu * nu == one);
  for (int slot = 0; slot < n; ++slot) {
    const GnElement a = GnElement::basis(slot, n);
    rep.record("nu-central", a * nu == nu * a);
    for (int other = 0; other < n; ++other) {
      const GnElement b = GnElement::basis(other, n);
      const GnElement expect = q(slot, other) ? nu : one;
      rep.record("generator-commutators", gn_commutator(a, b) == expect,
                 std::to_string(slot) + "," + std::to_string(other));
    }
  }
  rep.record("s1-u2-commutator", n >= 3 && gn_commutator(s1, GnElement::u(2, n)) == nu);
  for (int c = 0; c < cases; ++c) {
    const GnElement a = random_element(rng, n), b = random_element(rng, n),
                    d = random_element(rng, n);
    const std::string tag = show(a) + " " + show(b);
    const GnElement expect = q.eval(a.vec, b.vec) ? nu : one;
    rep.record("commutator-form", gn_commutator(a, b) == expect, tag);
    rep.record("associative", (a * b) * d == a * (b * d), tag);
    rep.record("inverse", a * a.inverse() == one && a.inverse() * a == one, tag);
    rep.record("inverse-of-product", (a * b).inverse() == b.inverse() * a.inverse(), tag);
    const int m = std::uniform_int_distribution<int>(-6, 6)(rng);
    GnElement rep_pow = one;
    for (int k = 0; k < std::abs(m); ++k)
      rep_pow = rep_pow * (m < 0 ? a.inverse() : a);
    rep.record("power", a.pow(m) == rep_pow, tag);
  }
  // Square classes commute up to nu exactly when they share one index.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const int shared = (i == k) + (i == l) + (j == k) + (j == l);
          rep.record("s-ij-commutators",
                     gn_commutator(s_ij(i, j, n), s_ij(k, l, n)) == (shared == 1 ? nu : one));
        }
  // G(n-1) sits inside G(n) by zero padding.
  if (n >= 4) {
    auto pad = [n](GnElement g) {
      g.vec.push_back(0);
      return g;
    };
    const GnAction small(n - 1), big(n);
    for (int c = 0; c < cases; ++c) {
      const GnElement a = random_element(rng, n - 1), b = random_element(rng, n - 1);
      const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
      const int sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
      rep.record("embedding",
                 pad(a * b) == pad(a) * pad(b) && pad(a.inverse()) == pad(a).inverse() &&
                     pad(small.act(a, i, sign)) == big.act(pad(a), i, sign),
                 show(a));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j)
        rep.record("embedding-s-ij", pad(s_ij(i, j, n - 1)) == s_ij(i, j, n));
  }
}

void suite_gn_action(SuiteReport &rep, int n, int cases, Rng &rng) {
  const GnAction act(n);
  std::vector<GnElement> basis;
  for (int slot = 0; slot < n; ++slot)
    basis.push_back(GnElement::basis(slot, n));
  basis.push_back(GnElement::nu(n));
  for (int c = 0; c < cases; ++c)
    basis.push_back(random_element(rng, n));

  auto acts_same = [&](const BraidWord &a, const BraidWord &b) {
    for (const auto &g : basis)
      if (act.act_word(g, a) != act.act_word(g, b))
        return false;
    return true;
  };
  const BraidWord empty(n);
  for (int i = 1; i < n; ++i) {
    rep.record("inverse-action", acts_same(BraidWord(n, {i, -i}), empty) &&
                                     acts_same(BraidWord(n, {-i, i}), empty));
    for (int j = 1; j < n; ++j) {
      if (j == i + 1)
        rep.record("triple-relation",
                   acts_same(BraidWord(n, {i, j, i}), BraidWord(n, {j, i, j})));
      if (std::abs(i - j) >= 2)
        rep.record("far-commutation", acts_same(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
    }
    const GnElement sq = s_ij(i, i + 1, n);
    bool conj = true;
    for (const auto &g : basis)
      conj = conj && act.act_word(g, BraidWord(n, {i, i})) == gn_conjugate(g, sq);
    rep.record("square-is-conjugation", conj, std::to_string(i));
  }
  if (n >= 4) {
    rep.record("quadrangle-trivial", acts_same(quadrangle_relator(n), empty));
    rep.record("transversal-trivial", acts_same(transversal_commutator(n), empty));
  }
  for (int c = 0; c < cases; ++c) {
    const GnElement a = random_element(rng, n), b = random_element(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    rep.record("automorphism", act.act(a * b, i, sign) == act.act(a, i, sign) * act.act(b, i, sign),
               show(a) + " " + show(b));
    GnElement z = a;
    z.vec[0] = 0;
    const BraidWord w = random_word(rng, n, 12);
    rep.record("degree-zero-closed", act.act_word(z, w).vec[0] == 0, show(z));
    if (n >= 4) {
      const BraidWord b = random_word(rng, n, 10);
      rep.record("quadrangle-conjugates-trivial",
                 act.act_word(a, conjugate(quadrangle_relator(n), b)) == a, show(b));
    }
  }
  // Hurwitz moves on the last column of squares.
  for (int k = 1; k <= n - 2; ++k) {
    for (int j = 1; j <= n - 1; ++j)
      if (j != k && j != k + 1)
        rep.record("hurwitz-fixed", act.act(s_ij(j, n, n), k, 1) == s_ij(j, n, n));
    rep.record("hurwitz-shift", act.act(s_ij(k, n, n), k, 1) == s_ij(k + 1, n, n));
    const GnElement a = s_ij(k + 1, n, n), b = s_ij(k, n, n);
    rep.record("hurwitz-conjugate", act.act(a, k, 1) == a * b * a.inverse());
  }
}

void suite_quotient(SuiteReport &rep, int n, int cases, Rng &rng) {
  const Quotient q(n);
  const GnElement nu = GnElement::nu(n);
  for (int i = 1; i < n; ++i)
    rep.record("square-table", q.normal_form(BraidWord(n, {i, i})).g == s_ij(i, i + 1, n));
  const NormalForm c = q.normal_form(c_word(n));
  rep.record("c-is-nu", c.perm.is_identity() && c.g == nu);
  rep.record("c-order-two", q.in_kernel(c_word(n).pow(2)));
  for (int i = 1; i < n; ++i)
    rep.record("c-central",
               q.equal(c_word(n) * BraidWord(n, {i}), BraidWord(n, {i}) * c_word(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rep.record("z-ij-square", q.lambda(z_ij(i, j, n).pow(2)) == s_ij(i, j, n));

  for (int c2 = 0; c2 < cases; ++c2) {
    const BraidWord w = random_word(rng, n, 60);
    const std::string tag = show(w);
    const NormalForm nf = q.normal_form(w);
    rep.record("degree-law", exponent_sum(w) == nf.perm.inversions() + 2 * nf.g.vec[0], tag);
    rep.record("perm-is-psi", nf.perm == psi(w), tag);
    rep.record("section-independence",
               q.normal_form(q.word_of(nf)) == nf && q.normal_form(q.word_of(nf, true)) == nf,
               tag);
    // Inserting a braid relation anywhere leaves the normal form alone.
    {
      const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
      const BraidWord rel(n, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
      const auto cut = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      std::vector<int> letters(w.letters().begin(), w.letters().begin() + cut);
      letters.insert(letters.end(), rel.letters().begin(), rel.letters().end());
      letters.insert(letters.end(), w.letters().begin() + cut, w.letters().end());
      rep.record("braid-relation-invariance", q.normal_form(BraidWord(n, letters)) == nf, tag);
    }
    const BraidWord v = random_word(rng, n, 30);
    rep.record("multiply", q.multiply(nf, q.normal_form(v)) == q.normal_form(w * v), tag);
    rep.record("inverse", q.inverse(nf) == q.normal_form(w.inverse()), tag);

    const BraidWord p1 = random_pure_word(rng, n, 25), p2 = random_pure_word(rng, n, 25);
    rep.record("homomorphism", q.lambda(p1 * p2) == q.lambda(p1) * q.lambda(p2), show(p1));
    const BraidWord b = random_word(rng, n, 15);
    rep.record("equivariance", q.lambda(conjugate(p1, b)) == q.action().act_word(q.lambda(p1), b),
               show(p1) + " by " + show(b));
    const std::vector<std::int64_t> expect = linking_coordinates(linking_matrix(p1));
    rep.record("abelian-part-linking", q.lambda(p1).vec == expect, show(p1));

    const GnElement g = random_element(rng, n, 2);
    const BraidWord l = q.lift(g);
    rep.record("lift-round-trip", psi(l).is_identity() && q.normal_form(l) == NormalForm{Perm(n), g},
               show(g));

    // Adjacent pair conjugated by b: commutators of squares are nu.
    {
      const int k = std::uniform_int_distribution<int>(1, n - 2)(rng);
      const BraidWord y1 = conjugate(BraidWord(n, {k}), b), y2 = conjugate(BraidWord(n, {k + 1}), b);
      bool ok = true;
      for (auto [e1, e2] : {std::pair{2, 2}, std::pair{2, -2}, std::pair{-2, -2}}) {
        const NormalForm cc = q.normal_form(commutator(y1.pow(e1), y2.pow(e2)));
        ok = ok && cc.perm.is_identity() && cc.g == nu;
      }
      rep.record("adjacent-squares-commutator", ok, show(b));
    }
    // Half-twists with the same endpoints: squares differ at most in the bit.
    {
      const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
      const BraidWord p = random_pure_word(rng, n, 12);
      const NormalForm a = q.normal_form(conjugate(BraidWord(n, {k, k}), b));
      const NormalForm d = q.normal_form(conjugate(BraidWord(n, {k, k}), p * b));
      rep.record("same-endpoints-squares", a.perm == d.perm && a.g.vec == d.g.vec, show(p));
    }
  }
}

void suite_kernel(SuiteReport &rep, int n, int cases, Rng &rng) {
  const Quotient q(n);
  const BraidWord quad = quadrangle_relator(n);
  rep.record("quadrangle-bn-nontrivial", !bn_trivial(quad));
  rep.record("transversal-bn-nontrivial", !bn_trivial(transversal_commutator(n)));
  rep.record("transversal-expansion",
             bn_equal(transversal_commutator(n), transversal_commutator_expanded(n)));
  std::uniform_int_distribution<int> mid(2, n - 2);
  for (int c = 0; c < cases; ++c) {
    const BraidWord b = random_word(rng, n, 20);
    rep.record("quadrangle-conjugate", q.in_kernel(conjugate(quad, b)), show(b));
    const int k = mid(rng);
    const BraidWord x(n, {k});
    const BraidWord y = conjugate(x, BraidWord(n, {k - 1, k + 1}));
    rep.record("transversal-conjugate", q.in_kernel(conjugate(commutator(x, y), b)), show(b));
    const BraidWord w = random_word(rng, n, 20);
    if (!psi(w).is_identity()) {
      rep.record("non-pure-outside", !q.in_kernel(w), show(w));
    } else {
      // Pure words whose linking numbers give a non-zero abelian part.
      const BraidWord p = w * BraidWord(n, {k, k});
      const auto coords = linking_coordinates(linking_matrix(p));
      if (std::ranges::any_of(coords, [](std::int64_t v) { return v != 0; }))
        rep.record("linked-outside", !q.in_kernel(p), show(p));
    }
  }
}

void suite_primes(SuiteReport &rep, int n, int cases, std::uint64_t seed, Rng &rng) {
  const GnInstance grp(n);
  const auto pair = canonical_prime(n);
  const GnElement nu = GnElement::nu(n);
  rep.record("canonical-tau", pair.tau == nu);
  rep.record("canonical-degree-zero", pair.h.vec[0] == 0);
  rep.record("frame-criterion", check_prime_frame(grp, pair.h, pair.tau).passed());
  {
    const auto wrong_tau = check_prime_frame(grp, pair.h, grp.identity());
    rep.record("mutant-wrong-tau", !wrong_tau.passed() && wrong_tau.failed == "1");
    const auto not_prime = check_prime_frame(grp, GnElement::u(1, n) * GnElement::u(2, n), nu);
    rep.record("mutant-not-prime", !not_prime.passed() && not_prime.failed == "1");
    const auto wrong_support = check_prime_frame(grp, GnElement::u(3, n), nu);
    rep.record("mutant-wrong-support", !wrong_support.passed() && wrong_support.failed == "1");
  }
  const auto suite = prime_identity_suite(grp, pair, cases, seed);
  for (const auto &[id, counts] : suite.checks)
    for (int k = 0; k < counts.second; ++k)
      rep.record(id, k < counts.first);
  for (const auto &f : suite.failures)
    rep.failures.push_back(f);
  // The bounded orbit of length 3 only reaches all generators at n = 5.
  if (n == 5) {
    const GnInstance g0(n, true);
    rep.record("orbit-criterion", check_orbit_criterion(g0, pair.h).verdict == Verdict::PassUpToBound);
    rep.record("orbit-criterion-nu", check_orbit_criterion(g0, nu).failed == "0");
    rep.record("orbit-criterion-s1", check_orbit_criterion(g0, GnElement::s1(n)).failed == "1a");
  }
  for (int c = 0; c < cases; ++c) {
    const BraidWord b = random_word(rng, n, 10);
    const GnElement hb = apply_word(grp, pair.h, b);
    const HalfTwist xb = ht_conjugate(pair.ht, b);
    std::vector<HalfTwist> samples;
    for (int r = 0; r < 6; ++r)
      samples.push_back(ht_conjugate(
          HalfTwist::frame(std::uniform_int_distribution<int>(1, n - 1)(rng), n), b));
    rep.record("axiom-spot-check", axiom_spot_check(grp, hb, xb, pair.tau, samples).passed(),
               show(b));
  }
}

}  // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"artin",  "tits",   "gn-presentation", "gn-action",
                                              "quotient", "kernel", "primes"};
  return names;
}

bool is_suite(const std::string &name) {
  return name == "all" || std::ranges::find(suite_names(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string &name, int n, int cases, std::uint64_t seed) {
  require(is_suite(name), "unknown suite '" + name + "'");
  require(cases >= 0, "cases must be non-negative");
  SuiteReport rep;
  rep.seed = seed;
  rep.cases = cases;
  if (name == "all") {
    for (const auto &sub : suite_names()) {
      const SuiteReport r = run_suite(sub, n, cases, seed);
      for (const auto &[id, c] : r.checks) {
        auto &slot = rep.checks[sub + "/" + id];
        slot.first += c.first;
        slot.second += c.second;
      }
      for (const auto &f : r.failures)
        rep.failures.push_back(sub + "/" + f);
    }
    return rep;
  }
  const bool needs_quotient = name == "quotient" || name == "kernel" || name == "primes";
  const int least = needs_quotient ? 4 : (name == "artin" || name == "tits") ? 2 : 3;
  require(n >= least, "suite '" + name + "' needs --n >= " + std::to_string(least) + ", got " +
                          std::to_string(n));
  Rng rng = make_rng(seed);
  if (name == "artin")
    suite_artin(rep, n, cases, rng);
  else if (name == "tits")
    suite_tits(rep, n, cases, rng);
  else if (name == "gn-presentation")
    suite_gn_presentation(rep, n, cases, rng);
  else if (name == "gn-action")
    suite_gn_action(rep, n, cases, rng);
  else if (name == "quotient")
    suite_quotient(rep, n, cases, rng);
  else if (name == "kernel")
    suite_kernel(rep, n, cases, rng);
  else
    suite_primes(rep, n, cases, seed, rng);
  return rep;
}

}  // namespace tbn
