#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tbn/freegroup.hpp"

namespace tbn {

/// Syntactic word in the frame generators X_1..X_{n-1} of B_n. Letter +i is
/// X_i, -i its inverse. No reduction is performed.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int n);
  BraidWord(int n, std::vector<int> letters);
  BraidWord(int n, std::initializer_list<int> letters);

  int n() const { return n_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(int k) const;
  BraidWord &operator*=(const BraidWord &rhs);
  friend BraidWord operator*(BraidWord a, const BraidWord &b) { return a *= b; }
  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  int n_ = 2;
  std::vector<int> letters_;
};

/// Conjugate in the convention x_y = y^-1 x y.
BraidWord conjugate(const BraidWord &x, const BraidWord &y);
/// [a, b] = a b a^-1 b^-1.
BraidWord commutator(const BraidWord &a, const BraidWord &b);

/// Permutation of {1..n} in one-line notation. Products compose as right
/// actions: (x)(a*b) = ((x)a)b.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> one_line);

  int n() const { return static_cast<int>(image_.size()); }
  /// (x)pi for x in 1..n.
  int operator()(int x) const { return image_[x - 1]; }
  const std::vector<int> &one_line() const { return image_; }

  bool is_identity() const;
  Perm inverse() const;
  std::int64_t inversions() const;
  /// Right multiplication by the adjacent transposition (i i+1).
  Perm times_transposition(int i) const;
  /// Whether pi*(i i+1) is longer than pi.
  bool ascent(int i) const;

  friend Perm operator*(const Perm &a, const Perm &b);
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  std::vector<int> image_;
};

Perm psi(const BraidWord &w);
std::int64_t exponent_sum(const BraidWord &w);

/// Images of the free generators x_1..x_n under the right Artin action of w.
/// X_i sends x_i to x_{i+1} and x_{i+1} to x_{i+1} x_i x_{i+1}^-1.
std::vector<FreeWord> artin_images(const BraidWord &w);
/// Exact equality in B_n.
bool bn_equal(const BraidWord &a, const BraidWord &b);
bool bn_trivial(const BraidWord &w);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Pairwise linking numbers of a pure braid; lk[i][j] for strands i, j
/// (0-based). Throws InputError for non-pure words.
IntMatrix linking_matrix(const BraidWord &w);

/// Positive lift of a reduced word of p. Consecutive bubble sweeps start
/// from the left; `reverse_sweeps` sweeps right to left instead, which
/// yields another reduced word of the same permutation.
BraidWord tits_lift(const Perm &p, bool reverse_sweeps = false);

/// Word for the conjugate (X_index)_conj, with an order on its endpoints.
struct HalfTwist {
  BraidWord conj;
  int index = 1;
  bool reversed = false;

  int n() const { return conj.n(); }
  static HalfTwist frame(int i, int n, bool reversed = false);
  friend bool operator==(const HalfTwist &, const HalfTwist &) = default;
};

BraidWord ht_word(const HalfTwist &h);
/// Ordered endpoints (origin, end).
std::pair<int, int> ht_endpoints(const HalfTwist &h);
HalfTwist ht_conjugate(const HalfTwist &h, const BraidWord &b);
HalfTwist ht_reversed(const HalfTwist &h);

struct PairRelation {
  bool commute = false;
  bool triple = false;
  int common_endpoints = 0;

  /// "disjoint-or-transversal", "consecutive" or "unclassified".
  std::string label() const;
  friend bool operator==(const PairRelation &, const PairRelation &) = default;
};

PairRelation classify_pair(const HalfTwist &a, const HalfTwist &b);

/// Z_ij with endpoints {i, j}, built as a conjugate of X_1.
HalfTwist z_half_twist(int i, int j, int n);
BraidWord z_ij(int i, int j, int n);
/// Conjugate (X_i)_{X_{i+1} ... X_{j-1}} naming the same half-twist.
BraidWord z_ij_consecutive(int i, int j, int n);

/// Y1^2 Y3^2 Y4^-2 Y2^-2 for the quadrangle
/// (X1, (X3)_{X2^-1}, X3, (X1)_{X2^-1}).
BraidWord quadrangle_relator(int n);
/// [X2, (X2)_{X1 X3}].
BraidWord transversal_commutator(int n);
/// The right-hand side (X3)^-2_{X2^-1} (X1)^-2_{X2^-1} X1^2 X3^2.
BraidWord transversal_commutator_expanded(int n);
/// c = [X1^2, X2^2].
BraidWord c_word(int n);

/// Word t with (X_i)_t = X_j and endpoints carried in order.
BraidWord frame_transport(int i, int j, int n);

}  // namespace tbn
