// Python view of the core: words are lists of ints, elements are
// (bit, vec) tuples and reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tbn/braid.hpp"
#include "tbn/error.hpp"
#include "tbn/gn.hpp"
#include "tbn/primes.hpp"
#include "tbn/quotient.hpp"
#include "tbn/text.hpp"
#include "tbn/verify.hpp"

namespace py = pybind11;
using namespace tbn;

namespace {

using Element = std::pair<int, std::vector<std::int64_t>>;

GnElement element(const Element &e, int n) {
  require(e.first == 0 || e.first == 1, "bit must be 0 or 1");
  require(static_cast<int>(e.second.size()) == n,
          "element needs " + std::to_string(n) + " coordinates");
  GnElement g = GnElement::identity(n);
  g.bit = e.first;
  g.vec = e.second;
  return g;
}

Element pack(const GnElement &g) { return {g.bit, g.vec}; }

BraidWord word(const std::vector<int> &letters, int n) {
  for (int l : letters)
    require(l != 0 && l < n && l > -n,
            "letter " + std::to_string(l) + " out of range for n=" + std::to_string(n));
  return BraidWord(n, letters);
}

// Round-trip through the JSON text so Python sees the same records as tb.
py::object as_python(const text::Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_tbn, m) {
  m.doc() = "Braid groups, the quotient B~_n and its normal form";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("parse_word", [](const std::string &s, int n) { return text::parse_word(s, n).letters(); },
        py::arg("text"), py::arg("n"));
  m.def("format_word", [](const std::vector<int> &w, int n) { return text::format_word(word(w, n)); },
        py::arg("word"), py::arg("n"));
  m.def("parse_element", [](const std::string &s, int n) { return pack(text::parse_element(s, n)); },
        py::arg("text"), py::arg("n"));
  m.def("format_element", [](const Element &e) {
    return text::format_element(element(e, static_cast<int>(e.second.size())));
  });

  m.def("normal_form",
        [](const std::vector<int> &w, int n) {
          return as_python(text::normal_form_json(Quotient(n).normal_form(word(w, n))));
        },
        py::arg("word"), py::arg("n"));
  m.def("bn_equal", [](const std::vector<int> &a, const std::vector<int> &b,
                       int n) { return bn_equal(word(a, n), word(b, n)); },
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("tbn_equal", [](const std::vector<int> &a, const std::vector<int> &b,
                        int n) { return Quotient(n).equal(word(a, n), word(b, n)); },
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("in_kernel", [](const std::vector<int> &w, int n) { return Quotient(n).in_kernel(word(w, n)); },
        py::arg("word"), py::arg("n"));
  m.def("permutation", [](const std::vector<int> &w, int n) { return psi(word(w, n)).one_line(); },
        py::arg("word"), py::arg("n"));
  m.def("linking_matrix", [](const std::vector<int> &w, int n) { return linking_matrix(word(w, n)); },
        py::arg("word"), py::arg("n"));

  m.def("act",
        [](const Element &e, const std::vector<int> &w) {
          const int n = static_cast<int>(e.second.size());
          return pack(GnAction(n).act_word(element(e, n), word(w, n)));
        },
        py::arg("element"), py::arg("word"));
  m.def("multiply", [](const Element &a, const Element &b) {
    const int n = static_cast<int>(a.second.size());
    return pack(element(a, n) * element(b, n));
  });
  m.def("inverse", [](const Element &a) {
    return pack(element(a, static_cast<int>(a.second.size())).inverse());
  });
  m.def("lift",
        [](const Element &e) {
          const int n = static_cast<int>(e.second.size());
          return Quotient(n).lift(element(e, n)).letters();
        },
        py::arg("element"));
  m.def("lambda_", [](const std::vector<int> &w, int n) { return pack(Quotient(n).lambda(word(w, n))); },
        py::arg("word"), py::arg("n"));
  m.def("nu", [](int n) { return pack(GnElement::nu(n)); });
  m.def("s_ij", [](int i, int j, int n) { return pack(s_ij(i, j, n)); });

  m.def("classify",
        [](const std::string &a, const std::string &b, int n) {
          return as_python(text::relation_json(
              classify_pair(text::parse_half_twist(a, n), text::parse_half_twist(b, n))));
        },
        py::arg("a"), py::arg("b"), py::arg("n"));

  m.def("prime_check",
        [](const Element &u, const Element &tau) {
          const int n = static_cast<int>(u.second.size());
          require(n >= 4, "prime_check needs n >= 4");
          return as_python(text::report_json(check_prime_frame(GnInstance(n), element(u, n), element(tau, n))));
        },
        py::arg("element"), py::arg("tau"));
  m.def("orbit_check",
        [](const Element &s, int bound, bool degree_zero) {
          const int n = static_cast<int>(s.second.size());
          require(n >= 5, "orbit_check needs n >= 5");
          require(bound >= 0 && bound <= 6, "bound must be in 0..6");
          return as_python(text::report_json(
              check_orbit_criterion(GnInstance(n, degree_zero), element(s, n), OrbitOptions{bound, 2})));
        },
        py::arg("element"), py::arg("bound") = 3, py::arg("degree_zero") = true);
  m.def("canonical_prime", [](int n) {
    const auto pair = canonical_prime(n);
    return py::make_tuple(pack(pair.h), pack(pair.tau));
  });

  m.def("verify",
        [](const std::string &suite, int n, int cases, std::uint64_t seed) {
          require(is_suite(suite), "unknown suite '" + suite + "'");
          return as_python(text::suite_json(suite, run_suite(suite, n, cases, seed)));
        },
        py::arg("suite") = "all", py::arg("n") = 4, py::arg("cases") = 50, py::arg("seed") = 0);
}
