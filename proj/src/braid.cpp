#include "tbn/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tbn/error.hpp"

namespace tbn {

// --- BraidWord ---------------------------------------------------------------

BraidWord::BraidWord(int n) : n_(n) {
  require(n >= 2, "braid group needs n >= 2, got " + std::to_string(n));
}

BraidWord::BraidWord(int n, std::vector<int> letters) : BraidWord(n) {
  for (int letter : letters)
    require(letter != 0 && std::abs(letter) <= n - 1,
            "braid letter " + std::to_string(letter) + " out of range for n=" +
                std::to_string(n));
  letters_ = std::move(letters);
}

BraidWord::BraidWord(int n, std::initializer_list<int> letters)
    : BraidWord(n, std::vector<int>(letters)) {}

BraidWord BraidWord::inverse() const {
  BraidWord w(n_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int &letter : w.letters_)
    letter = -letter;
  return w;
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out(n_);
  for (int i = 0; i < std::abs(k); ++i)
    out *= base;
  return out;
}

BraidWord &BraidWord::operator*=(const BraidWord &rhs) {
  require(n_ == rhs.n_, "braid words with different strand counts");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

BraidWord conjugate(const BraidWord &x, const BraidWord &y) {
  return y.inverse() * x * y;
}

BraidWord commutator(const BraidWord &a, const BraidWord &b) {
  return a * b * a.inverse() * b.inverse();
}

// --- Perm --------------------------------------------------------------------

Perm::Perm(int n) : image_(n) {
  require(n >= 1, "permutation degree must be >= 1");
  std::iota(image_.begin(), image_.end(), 1);
}

Perm::Perm(std::vector<int> one_line) : image_(std::move(one_line)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    require(v >= 1 && v <= n() && !seen[v], "not a permutation of 1..n");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (image_[x - 1] != x)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 1; x <= n(); ++x)
    inv[image_[x - 1] - 1] = x;
  return Perm(std::move(inv));
}

std::int64_t Perm::inversions() const {
  std::int64_t count = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (image_[a] > image_[b])
        ++count;
  return count;
}

Perm Perm::times_transposition(int i) const {
  require(i >= 1 && i < n(), "transposition index out of range");
  Perm out = *this;
  for (int &v : out.image_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return out;
}

bool Perm::ascent(int i) const {
  require(i >= 1 && i < n(), "transposition index out of range");
  for (int v : image_) {
    if (v == i)
      return true;
    if (v == i + 1)
      return false;
  }
  throw InternalError("permutation lost a value");
}

Perm operator*(const Perm &a, const Perm &b) {
  require(a.n() == b.n(), "permutations of different degree");
  std::vector<int> img(a.image_.size());
  for (int x = 1; x <= a.n(); ++x)
    img[x - 1] = b(a(x));
  return Perm(std::move(img));
}

Perm psi(const BraidWord &w) {
  Perm p(w.n());
  for (int letter : w.letters())
    p = p.times_transposition(std::abs(letter));
  return p;
}

std::int64_t exponent_sum(const BraidWord &w) {
  std::int64_t sum = 0;
  for (int letter : w.letters())
    sum += letter > 0 ? 1 : -1;
  return sum;
}

// --- Artin representation ----------------------------------------------------

std::vector<FreeWord> artin_images(const BraidWord &w) {
  const int n = w.n();
  std::vector<FreeWord> images = identity_images(n);
  // phi_{w a} = phi_w o phi_a: only the images of x_i, x_{i+1} change.
  for (int letter : w.letters()) {
    const int i = std::abs(letter) - 1;
    FreeWord a = images[i];
    FreeWord b = images[i + 1];
    if (letter > 0) {
      images[i] = b;
      images[i + 1] = b * a * b.inverse();
    } else {
      images[i] = a.inverse() * b * a;
      images[i + 1] = a;
    }
  }
  return images;
}

bool bn_equal(const BraidWord &a, const BraidWord &b) {
  require(a.n() == b.n(), "bn_equal: different strand counts");
  if (psi(a) != psi(b))
    return false;
  return artin_images(a) == artin_images(b);
}

bool bn_trivial(const BraidWord &w) { return bn_equal(w, BraidWord(w.n())); }

IntMatrix linking_matrix(const BraidWord &w) {
  const int n = w.n();
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  IntMatrix twice(n, std::vector<std::int64_t>(n, 0));
  for (int letter : w.letters()) {
    const int k = std::abs(letter) - 1;
    const int a = strand_at[k], b = strand_at[k + 1];
    const int sign = letter > 0 ? 1 : -1;
    twice[a][b] += sign;
    twice[b][a] += sign;
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  for (int p = 0; p < n; ++p)
    require(strand_at[p] == p, "linking_matrix: word is not a pure braid");
  for (auto &row : twice)
    for (auto &v : row) {
      if (v % 2 != 0)
        throw InternalError("odd crossing count between strands of a pure braid");
      v /= 2;
    }
  return twice;
}

BraidWord tits_lift(const Perm &p, bool reverse_sweeps) {
  // Sort the inverse permutation by adjacent position swaps; the swap
  // sequence read backwards is a reduced word for p.
  std::vector<int> q = p.inverse().one_line();
  const int n = p.n();
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int step = 0; step + 1 < n; ++step) {
      const int a = reverse_sweeps ? n - 2 - step : step;
      if (q[a] > q[a + 1]) {
        std::swap(q[a], q[a + 1]);
        swaps.push_back(a + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return BraidWord(n, std::move(swaps));
}

// --- half-twists -------------------------------------------------------------

HalfTwist HalfTwist::frame(int i, int n, bool reversed) {
  require(i >= 1 && i <= n - 1, "frame index out of range");
  return HalfTwist{BraidWord(n), i, reversed};
}

BraidWord ht_word(const HalfTwist &h) {
  require(h.index >= 1 && h.index <= h.n() - 1, "half-twist index out of range");
  return conjugate(BraidWord(h.n(), {h.index}), h.conj);
}

std::pair<int, int> ht_endpoints(const HalfTwist &h) {
  const Perm p = psi(h.conj);
  std::pair<int, int> ends{p(h.index), p(h.index + 1)};
  if (h.reversed)
    std::swap(ends.first, ends.second);
  return ends;
}

HalfTwist ht_conjugate(const HalfTwist &h, const BraidWord &b) {
  return HalfTwist{h.conj * b, h.index, h.reversed};
}

HalfTwist ht_reversed(const HalfTwist &h) {
  return HalfTwist{h.conj, h.index, !h.reversed};
}

std::string PairRelation::label() const {
  if (commute && common_endpoints == 0)
    return "disjoint-or-transversal";
  if (triple && common_endpoints == 1)
    return "consecutive";
  return "unclassified";
}

PairRelation classify_pair(const HalfTwist &a, const HalfTwist &b) {
  require(a.n() == b.n(), "classify_pair: different strand counts");
  const BraidWord x = ht_word(a), y = ht_word(b);
  PairRelation rel;
  rel.commute = bn_trivial(commutator(x, y));
  rel.triple = bn_equal(x * y * x, y * x * y);
  const auto [a0, a1] = ht_endpoints(a);
  const auto [b0, b1] = ht_endpoints(b);
  rel.common_endpoints = static_cast<int>(std::set<int>{a0, a1}.count(b0) +
                                          std::set<int>{a0, a1}.count(b1));
  return rel;
}

HalfTwist z_half_twist(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "z_ij needs 1 <= i < j <= n");
  std::vector<int> conj;
  for (int k = 2; k <= j - 1; ++k)
    conj.push_back(k);
  if (i >= 2)
    for (int k = 1; k <= i - 1; ++k)
      conj.push_back(k);
  return HalfTwist{BraidWord(n, std::move(conj)), 1, false};
}

BraidWord z_ij(int i, int j, int n) { return ht_word(z_half_twist(i, j, n)); }

BraidWord z_ij_consecutive(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "z_ij needs 1 <= i < j <= n");
  std::vector<int> conj;
  for (int k = i + 1; k <= j - 1; ++k)
    conj.push_back(k);
  return ht_word(HalfTwist{BraidWord(n, std::move(conj)), i, false});
}

BraidWord quadrangle_relator(int n) {
  require(n >= 4, "quadrangle_relator needs n >= 4");
  const BraidWord x1(n, {1}), x3(n, {3}), x2inv(n, {-2});
  const BraidWord y1 = x1, y2 = conjugate(x3, x2inv), y3 = x3,
                  y4 = conjugate(x1, x2inv);
  return y1.pow(2) * y3.pow(2) * y4.pow(-2) * y2.pow(-2);
}

BraidWord transversal_commutator(int n) {
  require(n >= 4, "transversal_commutator needs n >= 4");
  const BraidWord x2(n, {2});
  return commutator(x2, conjugate(x2, BraidWord(n, {1, 3})));
}

BraidWord transversal_commutator_expanded(int n) {
  require(n >= 4, "transversal_commutator needs n >= 4");
  const BraidWord x1(n, {1}), x3(n, {3}), x2inv(n, {-2});
  return conjugate(x3.pow(-2), x2inv) * conjugate(x1.pow(-2), x2inv) * x1.pow(2) *
         x3.pow(2);
}

BraidWord c_word(int n) {
  require(n >= 3, "c_word needs n >= 3");
  return BraidWord(n, {1, 1, 2, 2, -1, -1, -2, -2});
}

BraidWord frame_transport(int i, int j, int n) {
  require(i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1,
          "frame_transport index out of range");
  std::vector<int> letters;
  if (i < j) {
    for (int k = i; k < j; ++k) {
      letters.push_back(k + 1);
      letters.push_back(k);
    }
  } else {
    for (int k = i; k > j; --k) {
      letters.push_back(k - 1);
      letters.push_back(k);
    }
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace tbn
