#include "tbn/gn.hpp"

#include <boost/rational.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tbn/error.hpp"

namespace tbn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("G(n) exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("G(n) exponent overflow");
  return r;
}

int parity(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

void require_same_n(const GnElement &a, const GnElement &b) {
  require(a.n() == b.n(), "G(n) elements with different n");
}

}  // namespace

// --- elements ----------------------------------------------------------------

GnElement GnElement::identity(int n) {
  require(n >= 2, "G(n) needs n >= 2");
  return GnElement{0, std::vector<std::int64_t>(n, 0)};
}

GnElement GnElement::nu(int n) {
  GnElement g = identity(n);
  g.bit = 1;
  return g;
}

GnElement GnElement::basis(int slot, int n) {
  require(slot >= 0 && slot < n, "G(n) generator slot out of range");
  GnElement g = identity(n);
  g.vec[slot] = 1;
  return g;
}

GnElement GnElement::s1(int n) { return basis(0, n); }

GnElement GnElement::u(int i, int n) {
  require(i >= 1 && i <= n - 1, "u_i needs 1 <= i <= n-1");
  return basis(i, n);
}

bool GnElement::is_identity() const {
  if (bit != 0)
    return false;
  for (auto v : vec)
    if (v != 0)
      return false;
  return true;
}

int reorder_bit(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  const std::size_t n = x.size();
  if (n < 3)
    return 0;
  // Nonzero entries below the diagonal: Q[2][0] and Q[i+1][i], i >= 1.
  int bit = parity(x[2]) & parity(y[0]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    bit ^= parity(x[i + 1]) & parity(y[i]);
  return bit;
}

GnElement operator*(const GnElement &a, const GnElement &b) {
  require_same_n(a, b);
  GnElement r;
  r.bit = (a.bit + b.bit + reorder_bit(a.vec, b.vec)) % 2;
  r.vec.resize(a.vec.size());
  for (std::size_t k = 0; k < a.vec.size(); ++k)
    r.vec[k] = checked_add(a.vec[k], b.vec[k]);
  return r;
}

GnElement GnElement::inverse() const {
  GnElement r;
  r.bit = (bit + reorder_bit(vec, vec)) % 2;
  r.vec.resize(vec.size());
  for (std::size_t k = 0; k < vec.size(); ++k)
    r.vec[k] = checked_mul(vec[k], -1);
  return r;
}

GnElement GnElement::pow(std::int64_t m) const {
  // bit of g^m: m*bit + C(m,2)*beta(v,v); C(m,2) is odd iff m = 2,3 mod 4.
  const std::int64_t m4 = ((m % 4) + 4) % 4;
  const int binom_parity = m4 >= 2 ? 1 : 0;
  GnElement r;
  r.bit = (parity(m) * bit + binom_parity * reorder_bit(vec, vec)) % 2;
  r.vec.resize(vec.size());
  for (std::size_t k = 0; k < vec.size(); ++k)
    r.vec[k] = checked_mul(vec[k], m);
  return r;
}

GnElement gn_commutator(const GnElement &a, const GnElement &b) {
  return a * b * a.inverse() * b.inverse();
}

GnElement gn_conjugate(const GnElement &a, const GnElement &b) {
  return b.inverse() * a * b;
}

// --- form ----------------------------------------------------------------------

QForm::QForm(int n) : n_(n) { require(n >= 2, "Q form needs n >= 2"); }

int QForm::operator()(int a, int b) const {
  require(a >= 0 && a < n_ && b >= 0 && b < n_, "Q index out of range");
  if (a > b)
    std::swap(a, b);
  if (a == 0)
    return b == 2 ? 1 : 0;
  return b == a + 1 ? 1 : 0;
}

int QForm::eval(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  int acc = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if ((*this)(a, b))
        acc ^= parity(x[a]) & parity(y[b]);
  return acc;
}

// --- endomorphisms -------------------------------------------------------------

GnEndomorphism::GnEndomorphism(std::vector<GnElement> images)
    : images_(std::move(images)) {
  for (const auto &img : images_)
    require(img.n() == n(), "endomorphism images over different n");
}

GnElement GnEndomorphism::operator()(const GnElement &g) const {
  require(g.n() == n(), "endomorphism applied to element of different n");
  GnElement r = GnElement::identity(n());
  r.bit = g.bit;
  for (int k = 0; k < n(); ++k)
    if (g.vec[k] != 0)
      r = r * images_[k].pow(g.vec[k]);
  return r;
}

GnEndomorphism GnEndomorphism::inverse() const {
  using Rat = boost::rational<std::int64_t>;
  const int n = this->n();
  // Augmented [M | I] with M's columns the abelianized images.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      m[r][c] = Rat(images_[c].vec[r]);
    m[r][n + r] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == Rat(0))
      ++pivot;
    if (pivot == n)
      throw InternalError("G(n) endomorphism is not invertible");
    std::swap(m[pivot], m[col]);
    const Rat lead = m[col][col];
    for (auto &v : m[col])
      v /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rat(0))
        continue;
      const Rat f = m[r][col];
      for (int c = 0; c < 2 * n; ++c)
        m[r][c] -= f * m[col][c];
    }
  }
  std::vector<GnElement> inv_images;
  inv_images.reserve(n);
  for (int k = 0; k < n; ++k) {
    GnElement cand = GnElement::identity(n);
    for (int r = 0; r < n; ++r) {
      const Rat v = m[r][n + k];
      if (v.denominator() != 1)
        throw InternalError("abelianized G(n) automorphism is not unimodular");
      cand.vec[r] = v.numerator();
    }
    // The forward image of cand has the right A-part; its bit is the
    // correction needed.
    cand.bit = (*this)(cand).bit;
    inv_images.push_back(std::move(cand));
  }
  GnEndomorphism inv(std::move(inv_images));
  for (int k = 0; k < n; ++k)
    if ((*this)(inv.images_[k]) != GnElement::basis(k, n))
      throw InternalError("inverse G(n) automorphism failed verification");
  return inv;
}

// --- action ----------------------------------------------------------------------

GnElement generator_action_image(int i, int slot, int n) {
  require(i >= 1 && i <= n - 1, "generator index out of range");
  require(slot >= 0 && slot < n, "G(n) generator slot out of range");
  const GnElement nu = GnElement::nu(n);
  if (slot == 0)
    return i == 2 ? GnElement::u(2, n) * GnElement::s1(n) : GnElement::s1(n);
  const GnElement ui = GnElement::u(i, n);
  if (slot == i)
    return ui.inverse() * nu;
  if (slot == i - 1 || slot == i + 1)
    return ui * GnElement::u(slot, n);
  return GnElement::u(slot, n);
}

GnAction::GnAction(int n) : n_(n) {
  require(n >= 3, "the B~_n action on G(n) needs n >= 3");
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<GnElement> images;
    for (int slot = 0; slot < n; ++slot)
      images.push_back(generator_action_image(i, slot, n));
    GnEndomorphism fwd(std::move(images));
    backward_.push_back(fwd.inverse());
    forward_.push_back(std::move(fwd));
  }
}

GnElement GnAction::act(const GnElement &g, int i, int sign) const {
  require(i >= 1 && i <= n_ - 1, "generator index " + std::to_string(i) +
                                     " out of range for n=" + std::to_string(n_));
  require(sign == 1 || sign == -1, "action sign must be +1 or -1");
  return sign > 0 ? forward_[i - 1](g) : backward_[i - 1](g);
}

GnElement GnAction::act_word(const GnElement &g, const BraidWord &w) const {
  require(w.n() == n_, "act_word: braid word has different n");
  GnElement r = g;
  for (int letter : w.letters())
    r = act(r, std::abs(letter), letter > 0 ? 1 : -1);
  return r;
}

GnElement s_ij(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "s_ij needs 1 <= i < j <= n");
  const GnElement s1 = GnElement::s1(n);
  if (i == 1 && j == 2)
    return s1;
  GnElement r = GnElement::identity(n);
  if (i >= 2)
    r = GnElement::nu(n);
  for (int k = j - 1; k >= 2; --k)
    r = r * GnElement::u(k, n);
  if (i >= 2) {
    r = r * GnElement::u(1, n);
    for (int k = i - 1; k >= 2; --k)
      r = r * GnElement::u(k, n);
  }
  return r * s1;
}

}  // namespace tbn
