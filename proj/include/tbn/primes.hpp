#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tbn/braid.hpp"
#include "tbn/error.hpp"
#include "tbn/gn.hpp"

namespace tbn {

/// A group with a right action of B~_n given on the frame generators.
/// `less` is a strict total order used only to deduplicate elements.
template <class G>
concept ActionGroup = requires(const G &grp, const typename G::Element &a,
                               const typename G::Element &b, int i, int sign) {
  typename G::Element;
  { grp.n() } -> std::convertible_to<int>;
  { grp.identity() } -> std::same_as<typename G::Element>;
  { grp.mul(a, b) } -> std::same_as<typename G::Element>;
  { grp.inv(a) } -> std::same_as<typename G::Element>;
  { grp.eq(a, b) } -> std::convertible_to<bool>;
  { grp.less(a, b) } -> std::convertible_to<bool>;
  { grp.apply(a, i, sign) } -> std::same_as<typename G::Element>;
  { grp.generators() } -> std::same_as<std::vector<typename G::Element>>;
};

/// G(n) with the frame action. With `degree_zero` set the instance stands
/// for the subgroup G_0(n) = <u_1, ..., u_{n-1}>, and its generating set
/// changes accordingly.
class GnInstance {
public:
  using Element = GnElement;

  explicit GnInstance(int n, bool degree_zero = false);

  int n() const { return action_.n(); }
  bool degree_zero() const { return degree_zero_; }
  Element identity() const { return GnElement::identity(n()); }
  Element mul(const Element &a, const Element &b) const { return a * b; }
  Element inv(const Element &a) const { return a.inverse(); }
  bool eq(const Element &a, const Element &b) const { return a == b; }
  bool less(const Element &a, const Element &b) const { return a < b; }
  Element apply(const Element &a, int i, int sign) const { return action_.act(a, i, sign); }
  std::vector<Element> generators() const;
  /// Membership in the underlying subgroup (always true for G(n)).
  bool contains(const Element &a) const { return !degree_zero_ || a.vec[0] == 0; }
  const GnAction &action() const { return action_; }

private:
  GnAction action_;
  bool degree_zero_;
};

// --- generic helpers -------------------------------------------------------------

template <ActionGroup G>
typename G::Element apply_word(const G &grp, typename G::Element a, const BraidWord &w) {
  require(w.n() == grp.n(), "braid word and group have different n");
  for (int letter : w.letters())
    a = grp.apply(a, std::abs(letter), letter > 0 ? 1 : -1);
  return a;
}

template <ActionGroup G>
typename G::Element apply_word(const G &grp, const typename G::Element &a,
                               std::initializer_list<int> letters) {
  return apply_word(grp, a, BraidWord(grp.n(), letters));
}

/// [a, b] = a b a^-1 b^-1.
template <ActionGroup G>
typename G::Element group_commutator(const G &grp, const typename G::Element &a,
                                     const typename G::Element &b) {
  return grp.mul(grp.mul(grp.mul(a, b), grp.inv(a)), grp.inv(b));
}

/// t^-1 a t.
template <ActionGroup G>
typename G::Element group_conjugate(const G &grp, const typename G::Element &a,
                                    const typename G::Element &t) {
  return grp.mul(grp.mul(grp.inv(t), a), t);
}

template <ActionGroup G>
typename G::Element mul_all(const G &grp, std::initializer_list<typename G::Element> xs) {
  auto r = grp.identity();
  for (const auto &x : xs)
    r = grp.mul(r, x);
  return r;
}

std::mt19937_64 make_rng(std::uint64_t seed);
BraidWord random_word(std::mt19937_64 &rng, int n, int max_length);

// --- reports ---------------------------------------------------------------------

enum class Verdict { Pass, Fail, PassUpToBound };

std::string to_string(Verdict v);

struct PrimeReport {
  Verdict verdict = Verdict::Pass;
  std::string failed;  // first failing condition id, empty on pass
  std::map<std::string, bool> conditions;
  std::optional<int> bound;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> witness;
  std::vector<std::string> notes;

  bool passed() const { return verdict != Verdict::Fail; }

  /// Records a condition; the first false one decides the verdict.
  void record(const std::string &id, bool ok) {
    conditions[id] = conditions.contains(id) ? conditions[id] && ok : ok;
    if (!ok && failed.empty()) {
      failed = id;
      verdict = Verdict::Fail;
    }
  }
};

/// Per-check tallies of a randomized suite.
struct SuiteReport {
  std::uint64_t seed = 0;
  int cases = 0;
  std::map<std::string, std::pair<int, int>> checks;  // id -> (passed, total)
  std::vector<std::string> failures;

  void record(const std::string &id, bool ok, const std::string &detail = {}) {
    auto &[passed, total] = checks[id];
    ++total;
    if (ok)
      ++passed;
    else if (failures.size() < 20)
      failures.push_back(id + (detail.empty() ? "" : ": " + detail));
  }
  bool ok() const {
    for (const auto &[id, c] : checks)
      if (c.first != c.second)
        return false;
    return true;
  }
};

/// Polarized pair (h, X) with central element tau = h * h_{X^-1}.
template <class E>
struct PolarizedPair {
  E h;
  HalfTwist ht;
  E tau;
};

template <ActionGroup G>
PolarizedPair<typename G::Element> make_pair(const G &grp, const typename G::Element &h,
                                             const HalfTwist &ht) {
  require(ht.n() == grp.n(), "half-twist and group have different n");
  auto tau = grp.mul(h, apply_word(grp, h, ht_word(ht).inverse()));
  return {h, ht, tau};
}

// --- frame criterion ----------------------------------------------------------

/// Checks the finite frame criterion for u being prime with supporting
/// half-twist X_1 and central element tau. `extra_sample` widens the set tau
/// must commute with beyond grp.generators().
template <ActionGroup G>
PrimeReport check_prime_frame(const G &grp, const typename G::Element &u,
                              const typename G::Element &tau,
                              const std::vector<typename G::Element> &extra_sample = {}) {
  const int n = grp.n();
  require(n >= 4, "check_prime_frame needs n >= 4");
  PrimeReport rep;
  auto act = [&](const typename G::Element &x, std::initializer_list<int> w) {
    return apply_word(grp, x, w);
  };
  const auto one = grp.identity();

  rep.record("1", grp.eq(act(u, {-1}), grp.mul(grp.inv(u), tau)));
  rep.record("1:tau^2", grp.eq(grp.mul(tau, tau), one));
  bool invariant = true;
  for (int j = 1; j <= n - 1; ++j)
    invariant = invariant && grp.eq(grp.apply(tau, j, 1), tau);
  rep.record("1:tau_b", invariant);
  auto sample = grp.generators();
  sample.insert(sample.end(), extra_sample.begin(), extra_sample.end());
  bool central = true;
  for (const auto &x : sample)
    central = central && grp.eq(grp.mul(tau, x), grp.mul(x, tau));
  rep.record("1:central", central);
  rep.notes.push_back("tau centrality checked against " + std::to_string(sample.size()) +
                      " elements including the instance generators");

  rep.record("2a", grp.eq(act(u, {-2, -1}), grp.mul(grp.inv(u), act(u, {-2}))));
  rep.record("2b",
             grp.eq(act(u, {1, -2, -1}), grp.mul(grp.inv(act(u, {1})), act(u, {1, -2}))));
  bool disjoint_fixed = true;
  for (int j = 3; j <= n - 1; ++j)
    disjoint_fixed = disjoint_fixed && grp.eq(grp.apply(u, j, 1), u);
  rep.record("3", disjoint_fixed);
  return rep;
}

// --- bounded generation ------------------------------------------------------------

template <ActionGroup G>
struct ElementLess {
  const G *grp;
  bool operator()(const typename G::Element &a, const typename G::Element &b) const {
    return grp->less(a, b);
  }
};

/// {s_b : b a frame word of length <= bound}.
template <ActionGroup G>
std::vector<typename G::Element> bounded_orbit(const G &grp, const typename G::Element &s,
                                               int bound) {
  using E = typename G::Element;
  std::set<E, ElementLess<G>> seen(ElementLess<G>{&grp});
  std::vector<E> frontier{s};
  seen.insert(s);
  for (int depth = 0; depth < bound; ++depth) {
    std::vector<E> next;
    for (const auto &x : frontier)
      for (int i = 1; i <= grp.n() - 1; ++i)
        for (int sign : {1, -1}) {
          E y = grp.apply(x, i, sign);
          if (seen.insert(y).second)
            next.push_back(std::move(y));
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Whether every target is a product of at most 2*half_depth elements of
/// `gens` and their inverses (meet in the middle).
template <ActionGroup G>
std::vector<bool> reachable_products(const G &grp,
                                     const std::vector<typename G::Element> &gens,
                                     const std::vector<typename G::Element> &targets,
                                     int half_depth) {
  using E = typename G::Element;
  const ElementLess<G> lt{&grp};
  std::set<E, ElementLess<G>> letters(lt);
  for (const auto &g : gens) {
    letters.insert(g);
    letters.insert(grp.inv(g));
  }
  std::set<E, ElementLess<G>> ball(lt);
  ball.insert(grp.identity());
  std::vector<E> layer{grp.identity()};
  for (int d = 0; d < half_depth; ++d) {
    std::vector<E> next;
    for (const auto &x : layer)
      for (const auto &l : letters) {
        E y = grp.mul(x, l);
        if (ball.insert(y).second)
          next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  std::vector<bool> found;
  for (const auto &t : targets) {
    bool hit = false;
    for (const auto &a : ball)
      if (ball.contains(grp.mul(grp.inv(a), t))) {
        hit = true;
        break;
      }
    found.push_back(hit);
  }
  return found;
}

struct OrbitOptions {
  int orbit_bound = 3;
  int half_depth = 2;
};

/// Checks the hypotheses of the n >= 5 prime criterion for S. Condition (0)
/// is a bounded surrogate: the orbit under frame words of length
/// <= orbit_bound must generate every element of grp.generators() within
/// 2*half_depth factors.
template <ActionGroup G>
PrimeReport check_orbit_criterion(const G &grp, const typename G::Element &s,
                         const OrbitOptions &opts = {}) {
  const int n = grp.n();
  require(n >= 5, "check_orbit_criterion needs n >= 5");
  using E = typename G::Element;
  PrimeReport rep;
  auto act = [&](const E &x, std::initializer_list<int> w) { return apply_word(grp, x, w); };

  const auto orbit = bounded_orbit(grp, s, opts.orbit_bound);
  const auto targets = grp.generators();
  const auto found = reachable_products(grp, orbit, targets, opts.half_depth);
  bool generated = true;
  for (std::size_t k = 0; k < found.size(); ++k)
    if (!found[k]) {
      generated = false;
      rep.witness["0"] = "generator #" + std::to_string(k) + " not reached";
      break;
    }
  rep.record("0", generated);
  rep.witness["orbit_size"] = std::to_string(orbit.size());

  rep.record("1a", grp.eq(act(s, {-2, -1}), grp.mul(grp.inv(s), act(s, {-2}))));
  rep.record("1b",
             grp.eq(act(s, {1, -2, -1}), grp.mul(grp.inv(act(s, {1})), act(s, {1, -2}))));
  const E tau = grp.mul(s, act(s, {-1}));
  const E t = act(s, {-2});
  rep.record("2a", grp.eq(act(tau, {1, 1}), tau));
  // tau_T is conjugation by the group element T.
  rep.record("2b", grp.eq(group_conjugate(grp, tau, t), grp.inv(act(tau, {1}))));
  bool disjoint_fixed = true;
  for (int j = 3; j <= n - 1; ++j)
    disjoint_fixed = disjoint_fixed && grp.eq(grp.apply(s, j, 1), s);
  rep.record("3", disjoint_fixed);
  rep.record("4", grp.eq(apply_word(grp, s, c_word(n)), s));

  if (rep.verdict == Verdict::Pass) {
    rep.verdict = Verdict::PassUpToBound;
    rep.bound = opts.orbit_bound;
  }
  return rep;
}

// --- transport -----------------------------------------------------------------------

/// Braid word b with (source)_b = target as half-twists, carrying the
/// ordered endpoints of source onto those of target.
BraidWord transport_word(const HalfTwist &source, const HalfTwist &target);

/// The prime element of the pair coherent with `pair` whose support is
/// `target`. `perturb` is inserted into the conjugator right after the
/// source is moved back to its frame position; any element of the
/// polarized centralizer of that frame generator leaves the result unchanged.
template <ActionGroup G>
typename G::Element transport(const G &grp, const PolarizedPair<typename G::Element> &pair,
                              const HalfTwist &target, const BraidWord *perturb = nullptr) {
  BraidWord b = transport_word(pair.ht, target);
  if (perturb)
    b = pair.ht.conj.inverse() * *perturb * pair.ht.conj * b;
  return apply_word(grp, pair.h, b);
}

/// Generators X_i^2, X_{i+1} X_i^2 X_{i+1}, and the frame generators
/// disjoint from X_i, of the polarization-preserving centralizer of X_i,
/// obtained from those of X_1 by frame transport.
std::vector<BraidWord> polarized_centralizer_generators(int i, int n);

// --- axiom sampling ------------------------------------------------------------------

/// Checks the prime axioms of (g, X, tau) against sample half-twists, each
/// classified against X: one common endpoint checks axiom (2), commuting with
/// no common endpoint checks that the sample fixes g.
template <ActionGroup G>
PrimeReport axiom_spot_check(const G &grp, const typename G::Element &g, const HalfTwist &x,
                             const typename G::Element &tau,
                             const std::vector<HalfTwist> &samples) {
  using E = typename G::Element;
  PrimeReport rep;
  const BraidWord xw = ht_word(x);
  auto act = [&](const E &e, const BraidWord &w) { return apply_word(grp, e, w); };
  rep.record("1", grp.eq(act(g, xw.inverse()), grp.mul(grp.inv(g), tau)));
  int adjacent = 0, away = 0, skipped = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto &y = samples[k];
    const PairRelation rel = classify_pair(x, y);
    const BraidWord yw = ht_word(y);
    if (rel.common_endpoints == 1) {
      ++adjacent;
      const bool a = grp.eq(act(g, xw * yw.inverse() * xw.inverse()),
                            grp.mul(grp.inv(act(g, xw)), act(g, xw * yw.inverse())));
      const bool b = grp.eq(act(g, yw.inverse() * xw.inverse()),
                            grp.mul(grp.inv(g), act(g, yw.inverse())));
      rep.record("2a", a);
      rep.record("2b", b);
      if (!(a && b))
        rep.witness.try_emplace("2", "sample #" + std::to_string(k));
    } else if (rel.common_endpoints == 0 && rel.commute) {
      ++away;
      const bool fixed = grp.eq(act(g, yw), g);
      rep.record("3", fixed);
      if (!fixed)
        rep.witness.try_emplace("3", "sample #" + std::to_string(k));
    } else {
      ++skipped;
    }
  }
  rep.notes.push_back(std::to_string(adjacent) + " adjacent, " + std::to_string(away) +
                      " disjoint-or-transversal, " + std::to_string(skipped) +
                      " unconstrained samples");
  return rep;
}

// --- randomized identity suite -----------------------------------------------------

/// Checks the identities satisfied by a prime pair on `cases` random
/// configurations. Each configuration conjugates a frame configuration by a
/// random braid and compares transported primes.
template <ActionGroup G>
SuiteReport prime_identity_suite(const G &grp, const PolarizedPair<typename G::Element> &pair,
                                 int cases, std::uint64_t seed, int conj_length = 10) {
  using E = typename G::Element;
  const int n = grp.n();
  require(n >= 4, "prime_identity_suite needs n >= 4");
  SuiteReport rep;
  rep.seed = seed;
  rep.cases = cases;
  auto rng = make_rng(seed);
  const E &tau = pair.tau;
  const E one = grp.identity();
  auto act = [&](const E &e, const BraidWord &w) { return apply_word(grp, e, w); };
  auto eq = [&](const E &a, const E &b) { return grp.eq(a, b); };
  auto L = [&](const HalfTwist &t) { return transport(grp, pair, t); };
  std::uniform_int_distribution<int> pick_k(1, n - 1);

  for (int c = 0; c < cases; ++c) {
    const BraidWord b = random_word(rng, n, conj_length);
    const std::string tag = "case " + std::to_string(c);
    auto at = [&](int i, bool rev = false) { return HalfTwist{b, i, rev}; };
    const int k = pick_k(rng);
    const HalfTwist t = at(k);
    const BraidWord tw = ht_word(t);
    const E g = L(t);

    rep.record("central-element", eq(make_pair(grp, g, t).tau, tau), tag);
    rep.record("prime-twist-inverse",
               eq(act(g, tw), act(g, tw.inverse())) &&
                   eq(act(g, tw.inverse()), grp.mul(grp.inv(g), tau)) && eq(act(g, tw.pow(2)), g),
               tag);
    rep.record("anti-coherent", eq(L(at(k, true)), grp.mul(grp.inv(g), tau)), tag);

    const int nb = k < n - 1 ? k + 1 : k - 1;
    const BraidWord yw = ht_word(at(nb));
    rep.record("consecutive-square", eq(act(g, yw.pow(-2)), grp.mul(g, tau)), tag);
    rep.record("consecutive-commutator", eq(group_commutator(grp, g, act(g, yw.inverse())), tau),
               tag);

    // Orderly adjacent targets in both orders, and the reversed second twist.
    for (auto [i, j] : {std::pair{k, nb}, std::pair{nb, k}}) {
      const HalfTwist ti = at(i), yj = at(j), yj_rev = at(j, true);
      const E gt = L(ti), gy = L(yj), gy_rev = L(yj_rev);
      const BraidWord yinv = ht_word(yj).inverse();
      rep.record("orderly-adjacent", eq(act(gt, yinv), grp.mul(gt, gy)), tag);
      rep.record("non-orderly-adjacent", eq(act(gt, yinv), grp.mul(grp.inv(gy_rev), gt)), tag);
    }

    // Commutators of coherent primes by support type.
    {
      const int a = std::min(k, n - 2);
      rep.record("commutator-adjacent", eq(group_commutator(grp, L(at(a)), L(at(a + 1))), tau),
                 tag);
      const int d = std::min(k, n - 3);
      rep.record("commutator-disjoint", eq(group_commutator(grp, L(at(d)), L(at(d + 2))), one),
                 tag);
      const int m = std::clamp(k, 2, n - 2);
      const HalfTwist tr{BraidWord(n, {m - 1, m + 1}) * b, m, false};
      rep.record("commutator-transversal", eq(group_commutator(grp, L(at(m)), L(tr)), one), tag);
    }

    // Conjugated frame family xi_i and its relations.
    {
      std::vector<E> xi;
      for (int i = 1; i <= n - 1; ++i)
        xi.push_back(L(at(i)));
      bool ok = true;
      for (int i = 1; i <= n - 1; ++i) {
        const E &x = xi[i - 1];
        for (int j = 1; j <= n - 1; ++j) {
          const BraidWord jw = ht_word(at(j));
          if (j == i)
            ok = ok && eq(act(x, jw.inverse()), grp.mul(grp.inv(x), tau));
          else if (std::abs(i - j) == 1)
            ok = ok && eq(act(x, jw.inverse()), grp.mul(x, xi[j - 1])) &&
                 eq(group_commutator(grp, x, xi[j - 1]), tau);
          else
            ok = ok && eq(act(x, jw), x) && eq(group_commutator(grp, x, xi[j - 1]), one);
        }
      }
      rep.record("xi-frame", ok, tag);
    }

    // Polarized centralizer of the support fixes the prime.
    {
      bool ok = true;
      for (const auto &z : polarized_centralizer_generators(k, n))
        ok = ok && eq(act(g, conjugate(z, b)), g);
      for (const auto &z : polarized_centralizer_generators(pair.ht.index, n))
        ok = ok && eq(act(pair.h, conjugate(z, pair.ht.conj)), pair.h);
      rep.record("centralizer-fixed", ok, tag);
    }

    // Two pairs on the same support move together under one conjugator,
    // and perturbing by the centralizer does not change transport.
    {
      const PolarizedPair<E> other{grp.mul(grp.inv(pair.h), tau), pair.ht, tau};
      const auto zs = polarized_centralizer_generators(pair.ht.index, n);
      std::uniform_int_distribution<std::size_t> pick_z(0, zs.size() - 1);
      BraidWord perturb(n);
      for (int r = 0; r < 3; ++r)
        perturb *= std::bernoulli_distribution(0.5)(rng) ? zs[pick_z(rng)]
                                                         : zs[pick_z(rng)].inverse();
      const BraidWord move = transport_word(pair.ht, t);
      const E g1 = transport(grp, pair, t, &perturb);
      const E g2 = transport(grp, other, t, &perturb);
      rep.record("transport-unique", eq(g1, g), tag);
      rep.record("simultaneous-conjugation",
                 eq(act(pair.h, move), g1) && eq(act(other.h, move), g2), tag);
    }

    // The conjugated pair satisfies the axioms against nearby half-twists.
    {
      std::vector<HalfTwist> samples;
      for (int j = 1; j <= n - 1; ++j)
        samples.push_back(at(j));
      for (int r = 0; r < 4; ++r)
        samples.push_back(HalfTwist{random_word(rng, n, 3) * b, pick_k(rng), false});
      const auto spot = axiom_spot_check(grp, g, t, tau, samples);
      rep.record("conjugation-stability", spot.passed(), tag + " " + spot.failed);
    }
  }
  return rep;
}

// --- the G(n) instance -----------------------------------------------------------------

/// Frame word whose Lambda image is the canonical prime supported on X_1.
BraidWord canonical_prime_word(int n);
/// The canonical prime of G(n) with frame-polarized X_1 and tau = nu.
PolarizedPair<GnElement> canonical_prime(int n);

}  // namespace tbn
