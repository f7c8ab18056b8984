#include "tbn/quotient.hpp"

#include <cstdlib>
#include <string>

#include "tbn/error.hpp"

namespace tbn {

namespace {

int checked_quotient_n(int n) {
  require(n >= 4, "B~_n needs n >= 4, got " + std::to_string(n));
  return n;
}

}  // namespace

std::vector<std::int64_t> linking_coordinates(const IntMatrix &lk) {
  const int n = static_cast<int>(lk.size());
  std::vector<std::int64_t> out(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (lk[a][b] == 0)
        continue;
      const GnElement s = s_ij(a + 1, b + 1, n);
      for (int k = 0; k < n; ++k)
        out[k] += lk[a][b] * s.vec[k];
    }
  return out;
}

Quotient::Quotient(int n) : n_(checked_quotient_n(n)), action_(n_) {
  squares_.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i)
    squares_.push_back(s_ij(i, i + 1, n));
}

NormalForm Quotient::normal_form(const BraidWord &w) const {
  require(w.n() == n_, "normal_form: word has n=" + std::to_string(w.n()) +
                           ", expected " + std::to_string(n_));
  Perm pi(n_);
  GnElement g = GnElement::identity(n_);
  for (int letter : w.letters()) {
    const int i = std::abs(letter);
    const int sign = letter > 0 ? 1 : -1;
    g = action_.act(g, i, sign);
    const bool longer = pi.ascent(i);
    if (sign > 0 && !longer)
      g = squares_[i - 1] * g;
    else if (sign < 0 && longer)
      g = squares_[i - 1].inverse() * g;
    pi = pi.times_transposition(i);
  }
  return NormalForm{std::move(pi), std::move(g)};
}

bool Quotient::equal(const BraidWord &a, const BraidWord &b) const {
  require(a.n() == b.n(), "tbn_equal: different strand counts");
  return normal_form(a) == normal_form(b);
}

bool Quotient::in_kernel(const BraidWord &w) const {
  return normal_form(w).is_identity();
}

GnElement Quotient::lambda(const BraidWord &w) const {
  NormalForm nf = normal_form(w);
  require(nf.perm.is_identity(), "lambda: word is not a pure braid");
  return std::move(nf.g);
}

BraidWord Quotient::lift(const GnElement &g) const {
  require(g.n() == n_, "lift: element has different n");
  BraidWord w(n_);
  auto append_power = [&](const BraidWord &factor, std::int64_t e) {
    require(std::abs(e) <= 1'000'000, "lift: exponent too large");
    w *= factor.pow(static_cast<int>(e));
  };
  append_power(BraidWord(n_, {1, 1}), g.vec[0]);
  for (int j = 1; j <= n_ - 1; ++j) {
    // A-coordinate V_j as a difference of two s_ab coordinates.
    const BraidWord factor =
        j == 1 ? z_ij(2, 3, n_).pow(2) * z_ij(1, 3, n_).pow(-2)
               : z_ij(1, j + 1, n_).pow(2) * z_ij(1, j, n_).pow(-2);
    append_power(factor, g.vec[j]);
  }
  const NormalForm nf = normal_form(w);
  if (!nf.perm.is_identity() || nf.g.vec != g.vec)
    throw InternalError("lift: abelian part of the scan disagrees with s_ij");
  if (nf.g.bit != g.bit)
    w *= c_word(n_);
  return w;
}

BraidWord Quotient::word_of(const NormalForm &nf, bool reverse_sweeps) const {
  require(nf.n() == n_, "word_of: normal form has different n");
  return tits_lift(nf.perm, reverse_sweeps) * lift(nf.g);
}

NormalForm Quotient::multiply(const NormalForm &a, const NormalForm &b) const {
  return normal_form(word_of(a) * word_of(b));
}

NormalForm Quotient::inverse(const NormalForm &a) const {
  return normal_form(word_of(a).inverse());
}

DegreeDecomposition Quotient::degree_decomposition(const BraidWord &w) const {
  const NormalForm nf = normal_form(w);
  DegreeDecomposition d;
  d.length = nf.perm.inversions();
  d.a0 = nf.g.vec[0];
  d.v.assign(nf.g.vec.begin() + 1, nf.g.vec.end());
  d.bit = nf.g.bit;
  return d;
}

}  // namespace tbn
