// tb: command-line front end for braid words, the quotient normal form,
// G(n) arithmetic and the prime checkers.
//
// Exit codes: 0 success / equal / pass, 1 not-equal / fail, 2 usage or
// format error.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "tbn/braid.hpp"
#include "tbn/error.hpp"
#include "tbn/gn.hpp"
#include "tbn/primes.hpp"
#include "tbn/quotient.hpp"
#include "tbn/text.hpp"
#include "tbn/verify.hpp"

namespace {

using tbn::text::Json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Config {
  int n = 4;
  bool json = false;
  std::uint64_t seed = 0;
  int cases = 100;
  int bound = 3;
  bool dump_tables = false;
};

void need_n(const Config &cfg, int least, const std::string &what) {
  tbn::require(cfg.n >= least,
               what + " needs --n >= " + std::to_string(least) + ", got " + std::to_string(cfg.n));
}

std::string read_word_arg(const std::string &arg) {
  if (arg != "-")
    return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

tbn::BraidWord word_arg(const Config &cfg, const std::string &arg) {
  return tbn::text::parse_word(read_word_arg(arg), cfg.n);
}

Json element_json(const tbn::GnElement &g) {
  Json j = Json::object();
  j["bit"] = g.bit;
  j["vec"] = g.vec;
  return j;
}

void dump_tables(int n) {
  if (n < 3)
    return;
  std::cerr << "# s_ij\n";
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      std::cerr << "s" << i << "," << j << " = " << tbn::text::format_element(tbn::s_ij(i, j, n))
                << "\n";
  std::cerr << "# action: slot image under X_i (slot 0 is s_1, slot k is u_k)\n";
  const tbn::GnAction act(n);
  for (int i = 1; i < n; ++i)
    for (int slot = 0; slot < n; ++slot)
      std::cerr << "X" << i << " slot " << slot << " -> "
                << tbn::text::format_element(act.act(tbn::GnElement::basis(slot, n), i, 1))
                << "  inverse -> "
                << tbn::text::format_element(act.act(tbn::GnElement::basis(slot, n), i, -1))
                << "\n";
}

int print_report(const Config &cfg, const tbn::PrimeReport &rep) {
  if (cfg.json) {
    std::cout << tbn::text::report_json(rep).dump() << "\n";
  } else {
    std::cout << tbn::to_string(rep.verdict);
    if (!rep.failed.empty())
      std::cout << " (condition " << rep.failed << ")";
    if (rep.bound)
      std::cout << " bound=" << *rep.bound;
    std::cout << "\n";
    for (const auto &[id, ok] : rep.conditions)
      std::cout << "  " << id << ": " << (ok ? "true" : "false") << "\n";
    for (const auto &[k, v] : rep.witness)
      std::cout << "  witness " << k << ": " << v << "\n";
    for (const auto &note : rep.notes)
      std::cout << "  note: " << note << "\n";
  }
  return rep.passed() ? kOk : kNo;
}

}  // namespace

int main(int argc, char **argv) {
  Config cfg;
  CLI::App app{"Braid groups B_n, the quotient B~_n and the prime checkers"};
  app.require_subcommand(1);
  app.add_option("--n", cfg.n, "number of strands")->capture_default_str();
  app.add_flag("--json", cfg.json, "emit one JSON document");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--dump-tables", cfg.dump_tables, "print s_ij and action tables to stderr");

  std::string w1, w2, e1, e2, h1, h2, group = "tbn", suite = "all", subgroup = "g0";
  int extra_sample = 0;

  auto *nf = app.add_subcommand("nf", "normal form of a word in B~_n");
  nf->add_option("WORD", w1, "word, or - for stdin")->required();

  auto *eq = app.add_subcommand("eq", "equality in B_n or B~_n");
  eq->add_option("--group", group, "bn or tbn")
      ->check(CLI::IsMember({"bn", "tbn"}))
      ->capture_default_str();
  eq->add_option("W1", w1)->required();
  eq->add_option("W2", w2)->required();

  auto *kernel = app.add_subcommand("kernel", "is the word trivial in B~_n");
  kernel->add_option("WORD", w1)->required();

  auto *act = app.add_subcommand("act", "right action of a word on a G(n) element");
  act->add_option("ELEM", e1, "bit;v0,...,v{n-1}")->required();
  act->add_option("WORD", w1)->required();

  auto *lift = app.add_subcommand("lift", "pure word with the given G(n) coordinate");
  lift->add_option("ELEM", e1)->required();

  auto *lk = app.add_subcommand("lk", "linking matrix of a pure braid");
  lk->add_option("WORD", w1)->required();

  auto *classify = app.add_subcommand("classify", "relation record of two half-twists");
  classify->add_option("HT1", h1, "i|w|+ or i|w|-")->required();
  classify->add_option("HT2", h2)->required();

  auto *prime = app.add_subcommand("prime-check", "frame criterion for a prime of G(n)");
  prime->add_option("ELEM", e1)->required();
  prime->add_option("TAU", e2)->required();
  prime->add_option("--sample", extra_sample, "extra random elements tau must commute with")
      ->capture_default_str();

  auto *prop = app.add_subcommand("prop71-check", "orbit criterion for a prime (n >= 5)");
  prop->add_option("ELEM", e1)->required();
  prop->add_option("--bound", cfg.bound, "orbit word-length bound")->capture_default_str();
  prop->add_option("--subgroup", subgroup, "g0 (degree zero part) or g")
      ->check(CLI::IsMember({"g0", "g"}))
      ->capture_default_str();

  auto *verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("SUITE", suite, "artin, tits, gn-presentation, gn-action, quotient, kernel, "
                                     "primes or all")
      ->capture_default_str();
  verify->add_option("--cases", cfg.cases, "random cases per check")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed (same as the global flag)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    tbn::require(cfg.n >= 2, "--n must be at least 2");
    if (cfg.dump_tables)
      dump_tables(cfg.n);

    if (*nf) {
      need_n(cfg, 4, "nf");
      const tbn::Quotient q(cfg.n);
      std::cout << tbn::text::normal_form_json(q.normal_form(word_arg(cfg, w1)), false).dump()
                << "\n";
      return kOk;
    }
    if (*eq) {
      const tbn::BraidWord a = word_arg(cfg, w1), b = word_arg(cfg, w2);
      bool same;
      if (group == "bn") {
        same = tbn::bn_equal(a, b);
      } else {
        need_n(cfg, 4, "eq --group tbn");
        same = tbn::Quotient(cfg.n).equal(a, b);
      }
      if (cfg.json)
        std::cout << Json{{"group", group}, {"equal", same}}.dump() << "\n";
      else
        std::cout << (same ? "equal" : "not-equal") << "\n";
      return same ? kOk : kNo;
    }
    if (*kernel) {
      need_n(cfg, 4, "kernel");
      const bool in = tbn::Quotient(cfg.n).in_kernel(word_arg(cfg, w1));
      if (cfg.json)
        std::cout << Json{{"kernel", in}}.dump() << "\n";
      else
        std::cout << (in ? "yes" : "no") << "\n";
      return in ? kOk : kNo;
    }
    if (*act) {
      need_n(cfg, 4, "act");
      const tbn::GnElement g = tbn::text::parse_element(e1, cfg.n);
      const tbn::GnElement out = tbn::GnAction(cfg.n).act_word(g, word_arg(cfg, w1));
      if (cfg.json)
        std::cout << element_json(out).dump() << "\n";
      else
        std::cout << tbn::text::format_element(out) << "\n";
      return kOk;
    }
    if (*lift) {
      need_n(cfg, 4, "lift");
      const tbn::BraidWord w = tbn::Quotient(cfg.n).lift(tbn::text::parse_element(e1, cfg.n));
      if (cfg.json)
        std::cout << Json{{"word", w.letters()}}.dump() << "\n";
      else
        std::cout << tbn::text::format_word(w) << "\n";
      return kOk;
    }
    if (*lk) {
      const tbn::IntMatrix m = tbn::linking_matrix(word_arg(cfg, w1));
      if (cfg.json) {
        std::cout << tbn::text::matrix_json(m).dump() << "\n";
      } else {
        for (const auto &row : m) {
          for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? " " : "") << row[k];
          std::cout << "\n";
        }
      }
      return kOk;
    }
    if (*classify) {
      const tbn::PairRelation r = tbn::classify_pair(tbn::text::parse_half_twist(h1, cfg.n),
                                                     tbn::text::parse_half_twist(h2, cfg.n));
      if (cfg.json)
        std::cout << tbn::text::relation_json(r).dump() << "\n";
      else
        std::cout << "commute=" << (r.commute ? "true" : "false")
                  << " triple=" << (r.triple ? "true" : "false")
                  << " common_endpoints=" << r.common_endpoints << " label=" << r.label() << "\n";
      return kOk;
    }
    if (*prime) {
      need_n(cfg, 4, "prime-check");
      const tbn::GnInstance grp(cfg.n);
      std::vector<tbn::GnElement> sample;
      auto rng = tbn::make_rng(cfg.seed);
      for (int k = 0; k < extra_sample; ++k)
        sample.push_back(tbn::random_element(rng, cfg.n));
      auto rep = tbn::check_prime_frame(grp, tbn::text::parse_element(e1, cfg.n),
                                        tbn::text::parse_element(e2, cfg.n), sample);
      rep.seed = cfg.seed;
      return print_report(cfg, rep);
    }
    if (*prop) {
      need_n(cfg, 5, "prop71-check");
      tbn::require(cfg.bound >= 0 && cfg.bound <= 6, "--bound must be in 0..6");
      const tbn::GnInstance grp(cfg.n, subgroup == "g0");
      const tbn::GnElement s = tbn::text::parse_element(e1, cfg.n);
      auto rep = tbn::check_orbit_criterion(grp, s, tbn::OrbitOptions{cfg.bound, 2});
      if (!grp.contains(s))
        rep.notes.push_back("element lies outside the degree zero subgroup");
      rep.seed = cfg.seed;
      return print_report(cfg, rep);
    }
    if (*verify) {
      tbn::require(tbn::is_suite(suite), "unknown suite '" + suite + "'");
      tbn::require(cfg.cases >= 0, "--cases must be non-negative");
      const tbn::SuiteReport rep = tbn::run_suite(suite, cfg.n, cfg.cases, cfg.seed);
      if (cfg.json) {
        std::cout << tbn::text::suite_json(suite, rep).dump() << "\n";
      } else {
        for (const auto &[id, c] : rep.checks)
          std::cout << (c.first == c.second ? "pass " : "FAIL ") << id << " " << c.first << "/"
                    << c.second << "\n";
        for (const auto &f : rep.failures)
          std::cout << "  failure: " << f << "\n";
        std::cout << (rep.ok() ? "pass" : "fail") << " " << suite << " n=" << cfg.n
                  << " cases=" << cfg.cases << " seed=" << cfg.seed << "\n";
      }
      return rep.ok() ? kOk : kNo;
    }
  } catch (const tbn::InputError &e) {
    std::cerr << "tb: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error &e) {
    std::cerr << "tb: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
