// Acceptance run: one line per criterion, each with its own time limit.
// Exits non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "tbn/braid.hpp"
#include "tbn/gn.hpp"
#include "tbn/primes.hpp"
#include "tbn/quotient.hpp"
#include "tbn/verify.hpp"

#ifndef TB_PATH
#error "TB_PATH must name the tb executable"
#endif

using namespace tbn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

FreeWord descending(const std::vector<FreeWord> &xs) {
  FreeWord p(static_cast<int>(xs.size()));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    p = p * *it;
  return p;
}

bool zero_vector(const std::vector<std::int64_t> &v) {
  for (auto x : v)
    if (x != 0)
      return false;
  return true;
}

std::string word_text(const BraidWord &w) {
  std::string s;
  for (int l : w.letters())
    s += (s.empty() ? "" : " ") + std::to_string(l);
  return s;
}

Outcome artin_faithfulness() {
  Outcome out;
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (j == i + 1)
          out.check(bn_equal(BraidWord(n, {i, j, i}), BraidWord(n, {j, i, j})), "triple relation");
        if (std::abs(i - j) >= 2)
          out.check(bn_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})), "far commutation");
        out.check(bn_trivial(BraidWord(n, {i, -i})), "inverse pair");
      }
  auto rng = make_rng(1001);
  std::uniform_int_distribution<int> pick_n(2, 6);
  for (int c = 0; c < 500; ++c) {
    const int n = pick_n(rng);
    const BraidWord w = random_word(rng, n, 50);
    out.check(descending(artin_images(w)) == descending(identity_images(n)),
              "descending product moved by [" + word_text(w) + "]");
  }
  return out;
}

Outcome transversal_identity() {
  Outcome out;
  for (int n = 4; n <= 6; ++n) {
    const BraidWord t = transversal_commutator(n);
    out.check(bn_equal(t, transversal_commutator_expanded(n)), "expansion");
    out.check(!bn_trivial(t), "commutator trivial in B_n");
    out.check(Quotient(n).in_kernel(t), "commutator not trivial in B~_n");
  }
  return out;
}

Outcome kernel_suite() {
  Outcome out;
  auto rng = make_rng(1003);
  std::uniform_int_distribution<int> pick_n(4, 7);
  for (int c = 0; c < 100; ++c) {
    const int n = pick_n(rng);
    const Quotient q(n);
    const BraidWord b = random_word(rng, n, 20);
    out.check(q.in_kernel(conjugate(quadrangle_relator(n), b)), "quadrangle conjugate");
    const int k = std::uniform_int_distribution<int>(2, n - 2)(rng);
    const BraidWord x(n, {k});
    const BraidWord y = conjugate(x, BraidWord(n, {k - 1, k + 1}));
    const BraidWord r = random_word(rng, n, 6);
    // A transversal pair moved by r, then the commutator conjugated by b.
    const BraidWord pair_comm = commutator(conjugate(x, r), conjugate(y, r));
    out.check(q.in_kernel(conjugate(pair_comm, b)), "transversal conjugate");
  }
  // Words outside the kernel: non-pure, or pure with linking numbers that
  // predict a non-zero abelian part.
  int non_pure = 0, linked = 0;
  while (non_pure + linked < 100) {
    const int n = pick_n(rng);
    const Quotient q(n);
    if ((non_pure + linked) % 2 == 0) {
      const BraidWord w = random_word(rng, n, 20);
      if (psi(w).is_identity())
        continue;
      ++non_pure;
      out.check(!q.in_kernel(w), "non-pure word in kernel");
    } else {
      const BraidWord p = random_pure_word(rng, n, 20);
      if (zero_vector(linking_coordinates(linking_matrix(p))))
        continue;
      ++linked;
      out.check(!q.in_kernel(p), "linked pure word in kernel");
    }
  }
  return out;
}

Outcome gn_structure() {
  Outcome out;
  for (int n = 3; n <= 7; ++n) {
    const SuiteReport pres = run_suite("gn-presentation", n, 1000, 1004 + n);
    out.check(pres.ok(), "presentation n=" + std::to_string(n) +
                             (pres.failures.empty() ? "" : ": " + pres.failures.front()));
  }
  for (int n = 3; n <= 8; ++n) {
    const SuiteReport act = run_suite("gn-action", n, 60, 1104 + n);
    out.check(act.ok(), "action n=" + std::to_string(n) +
                            (act.failures.empty() ? "" : ": " + act.failures.front()));
  }
  return out;
}

Outcome lambda_coherence() {
  Outcome out;
  auto rng = make_rng(1005);
  std::uniform_int_distribution<int> pick_n(4, 7);
  for (int c = 0; c < 500; ++c) {
    const int n = pick_n(rng);
    const Quotient q(n);
    const BraidWord p1 = random_pure_word(rng, n, 25), p2 = random_pure_word(rng, n, 25);
    out.check(q.lambda(p1 * p2) == q.lambda(p1) * q.lambda(p2), "homomorphism");
    const BraidWord b = random_word(rng, n, 20);
    out.check(q.lambda(conjugate(p1, b)) == q.action().act_word(q.lambda(p1), b), "equivariance");
    const auto expect = linking_coordinates(linking_matrix(p2));
    out.check(q.lambda(p2).vec == expect, "abelian part");
  }
  for (int c = 0; c < 200; ++c) {
    const int n = pick_n(rng);
    const Quotient q(n);
    const GnElement g = random_element(rng, n, 2);
    const BraidWord l = q.lift(g);
    out.check(psi(l).is_identity() && q.normal_form(l) == NormalForm{Perm(n), g}, "lift");
    const BraidWord w = random_word(rng, n, 40);
    const NormalForm nf = q.normal_form(w);
    out.check(q.normal_form(q.word_of(nf, true)) == nf && q.normal_form(q.word_of(nf)) == nf,
              "section independence");
  }
  return out;
}

Outcome structure_constants() {
  Outcome out;
  for (int n = 4; n <= 7; ++n) {
    const Quotient q(n);
    const NormalForm c = q.normal_form(c_word(n));
    out.check(c.perm.is_identity() && c.g == GnElement::nu(n), "c normal form");
    out.check(q.in_kernel(c_word(n).pow(2)), "c squared");
    for (int i = 1; i < n; ++i)
      out.check(q.equal(c_word(n) * BraidWord(n, {i}), BraidWord(n, {i}) * c_word(n)),
                "c central");
  }
  auto rng = make_rng(1006);
  std::uniform_int_distribution<int> pick_n(4, 7);
  for (int c = 0; c < 50; ++c) {
    const int n = pick_n(rng);
    const Quotient q(n);
    const int k = std::uniform_int_distribution<int>(1, n - 2)(rng);
    const BraidWord b = random_word(rng, n, 15);
    const BraidWord y1 = conjugate(BraidWord(n, {k, k}), b);
    const BraidWord y2 = conjugate(BraidWord(n, {k + 1, k + 1}), b);
    out.check(q.normal_form(commutator(y1, y2)) == NormalForm{Perm(n), GnElement::nu(n)},
              "adjacent squares");
  }
  for (int c = 0; c < 500; ++c) {
    const int n = pick_n(rng);
    const BraidWord w = random_word(rng, n, 60);
    const auto d = Quotient(n).degree_decomposition(w);
    out.check(exponent_sum(w) == d.length + 2 * d.a0, "degree law");
  }
  return out;
}

Outcome prime_machinery() {
  Outcome out;
  for (int n = 4; n <= 7; ++n) {
    const GnInstance grp(n);
    const auto pair = canonical_prime(n);
    const GnElement nu = GnElement::nu(n);
    out.check(check_prime_frame(grp, pair.h, pair.tau).verdict == Verdict::Pass,
              "canonical prime n=" + std::to_string(n));

    struct Mutant {
      std::string name;
      GnElement u, tau;
      std::string expect;
    };
    const std::vector<Mutant> mutants{
        {"tau identity", pair.h, grp.identity(), "1"},
        {"tau of infinite order", pair.h, nu * GnElement::s1(n), "1"},
        {"support X_2", GnElement::u(2, n).inverse() * nu, nu, "1"},
        {"support X_3", GnElement::u(3, n).inverse() * nu, nu, "1"},
        {"product u1 u2", GnElement::u(1, n) * GnElement::u(2, n), nu, "1"},
        {"times s_1", pair.h * GnElement::s1(n), nu, "1"},
        {"times nu", pair.h * nu, nu, "2a"},
    };
    for (const auto &m : mutants) {
      const auto rep = check_prime_frame(grp, m.u, m.tau);
      out.check(rep.verdict == Verdict::Fail && rep.failed == m.expect,
                "mutant '" + m.name + "' reported '" + rep.failed + "'");
    }

    const SuiteReport suite = prime_identity_suite(grp, pair, 50, 1007 + n);
    out.check(suite.ok() && suite.checks.at("xi-frame").second == 50,
              "identity suite n=" + std::to_string(n) +
                  (suite.failures.empty() ? "" : ": " + suite.failures.front()));

    auto rng = make_rng(2007 + n);
    for (int c = 0; c < 50; ++c) {
      const BraidWord b = random_word(rng, n, 12);
      std::vector<HalfTwist> samples;
      for (int i = 1; i < n; ++i)
        samples.push_back(ht_conjugate(HalfTwist::frame(i, n), b));
      for (int r = 0; r < 3; ++r)
        samples.push_back(HalfTwist{random_word(rng, n, 4) * b,
                                    std::uniform_int_distribution<int>(1, n - 1)(rng), false});
      const auto spot = axiom_spot_check(grp, apply_word(grp, pair.h, b),
                                         ht_conjugate(pair.ht, b), pair.tau, samples);
      out.check(spot.passed(), "spot check failed on " + spot.failed);
    }
  }
  return out;
}

Outcome orbit_criterion() {
  Outcome out;
  const GnInstance g0(5, true);
  const auto good = check_orbit_criterion(g0, canonical_prime(5).h, OrbitOptions{3, 2});
  out.check(good.verdict == Verdict::PassUpToBound && good.bound == 3, "canonical prime");
  const auto nu = check_orbit_criterion(g0, GnElement::nu(5), OrbitOptions{3, 2});
  out.check(nu.verdict == Verdict::Fail && nu.failed == "0", "nu reported '" + nu.failed + "'");
  const auto s1 = check_orbit_criterion(g0, GnElement::s1(5), OrbitOptions{3, 2});
  out.check(s1.verdict == Verdict::Fail && s1.failed == "1a", "s_1 reported '" + s1.failed + "'");
  return out;
}

Outcome transport_uniqueness() {
  Outcome out;
  auto rng = make_rng(1009);
  for (int n : {5, 6}) {
    const GnInstance grp(n);
    const auto pair = canonical_prime(n);
    const auto zs = polarized_centralizer_generators(pair.ht.index, n);
    std::uniform_int_distribution<std::size_t> pick_z(0, zs.size() - 1);
    for (int t = 0; t < 20; ++t) {
      const HalfTwist target{random_word(rng, n, 12),
                             std::uniform_int_distribution<int>(1, n - 1)(rng),
                             std::bernoulli_distribution(0.3)(rng)};
      const GnElement base = transport(grp, pair, target);
      for (int k = 0; k < 5; ++k) {
        BraidWord perturb(n);
        const int len = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int r = 0; r < len; ++r)
          perturb *= std::bernoulli_distribution(0.5)(rng) ? zs[pick_z(rng)]
                                                           : zs[pick_z(rng)].inverse();
        out.check(transport(grp, pair, target, &perturb) == base, "perturbed transport differs");
      }
      out.check(transport(grp, pair, ht_reversed(target)) == grp.mul(grp.inv(base), pair.tau),
                "anti-coherent transport");
    }
  }
  return out;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_tb(const std::string &args) {
  Run r;
  const std::string cmd = std::string(TB_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_conformance() {
  Outcome out;
  const std::string tc = word_text(transversal_commutator(5));
  const Run eq = run_tb("--n 5 eq --group tbn \"" + tc + "\" \"\"");
  out.check(eq.out == "equal\n" && eq.code == 0, "eq example: '" + eq.out + "'");
  const Run nf = run_tb("--n 4 nf \"1 1\"");
  out.check(nf.out == "{\"perm\":[1,2,3,4],\"bit\":0,\"vec\":[1,0,0,0]}\n" && nf.code == 0,
            "nf example: '" + nf.out + "'");
  const Run ver = run_tb("--n 5 verify all --cases 200 --seed 0");
  out.check(ver.code == 0 && ver.out.find("\npass all n=5 cases=200 seed=0\n") != std::string::npos,
            "verify example exit " + std::to_string(ver.code));

  // The same commands in JSON mode emit exactly one JSON document.
  const Run nf_json = run_tb("--n 4 --json nf \"1 1\"");
  out.check(nf_json.out == nf.out && nf_json.code == 0, "nf json");
  const Run eq_json = run_tb("--n 5 --json eq --group tbn \"" + tc + "\" \"\"");
  out.check(eq_json.out == "{\"group\":\"tbn\",\"equal\":true}\n" && eq_json.code == 0,
            "eq json: '" + eq_json.out + "'");
  const Run ver_json = run_tb("--n 5 --json verify all --cases 200 --seed 0");
  out.check(ver_json.code == 0, "verify json exit");
  try {
    const auto doc = nlohmann::json::parse(ver_json.out);
    out.check(doc.at("verdict") == "pass", "verify json verdict");
  } catch (const std::exception &e) {
    out.check(false, std::string("verify json parse: ") + e.what());
  }
  const Run bad = run_tb("--n 4 nf \"1 q\"");
  out.check(bad.code == 2 && bad.out.empty(), "malformed word exit code");
  const Run ne = run_tb("--n 5 eq --group bn \"" + tc + "\" \"\"");
  out.check(ne.out == "not-equal\n" && ne.code == 1, "bn not-equal");
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "artin faithfulness harness", 5, artin_faithfulness},
      {2, "transversal commutator identity", 1, transversal_identity},
      {3, "kernel suite", 10, kernel_suite},
      {4, "G(n) presentation and action", 10, gn_structure},
      {5, "Lambda coherence", 20, lambda_coherence},
      {6, "structure constants", 10, structure_constants},
      {7, "prime machinery", 30, prime_machinery},
      {8, "orbit criterion", 30, orbit_criterion},
      {9, "transport uniqueness", 10, transport_uniqueness},
      {10, "CLI conformance", 60, cli_conformance},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  (" << secs
         << " s, limit " << c.limit_s << " s)";
    if (!o.ok)
      line << "  " << o.detail;
    else if (!in_time)
      line << "  over time";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
