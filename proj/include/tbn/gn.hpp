#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tbn/braid.hpp"

namespace tbn {

/// Element nu^bit * s_1^vec[0] * u_1^vec[1] * ... * u_{n-1}^vec[n-1] of G(n),
/// the central extension of Z^n by Z/2 with commutator form Q. Every element
/// has exactly one such representation.
struct GnElement {
  int bit = 0;
  std::vector<std::int64_t> vec;

  int n() const { return static_cast<int>(vec.size()); }

  static GnElement identity(int n);
  static GnElement nu(int n);
  static GnElement s1(int n);
  /// u_i for 1 <= i <= n-1.
  static GnElement u(int i, int n);
  /// Canonical generator by slot: 0 is s_1, k >= 1 is u_k.
  static GnElement basis(int slot, int n);

  bool is_identity() const;

  GnElement inverse() const;
  GnElement pow(std::int64_t m) const;

  friend GnElement operator*(const GnElement &a, const GnElement &b);
  friend bool operator==(const GnElement &, const GnElement &) = default;
  friend auto operator<=>(const GnElement &, const GnElement &) = default;
};

/// Zero-diagonal symmetric 0/1 form: Q(S1,V2) = Q(V_i,V_{i+1}) = 1.
class QForm {
public:
  explicit QForm(int n);
  int n() const { return n_; }
  int operator()(int a, int b) const;
  /// Q(x, y) mod 2 extended bilinearly.
  int eval(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;

private:
  int n_;
};

/// sum_{k > j} x[k] y[j] Q[k][j] mod 2: the bit picked up when y's generators
/// are moved left past x's.
int reorder_bit(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

/// [a, b] = a b a^-1 b^-1.
GnElement gn_commutator(const GnElement &a, const GnElement &b);
/// b^-1 a b.
GnElement gn_conjugate(const GnElement &a, const GnElement &b);

/// A-coordinates: drops the bit.
inline const std::vector<std::int64_t> &ab_vector(const GnElement &g) { return g.vec; }

/// Endomorphism of G(n) given by the images of s_1, u_1, ..., u_{n-1}, all of
/// which must fix nu.
class GnEndomorphism {
public:
  GnEndomorphism() = default;
  explicit GnEndomorphism(std::vector<GnElement> images);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<GnElement> &images() const { return images_; }
  GnElement operator()(const GnElement &g) const;

  /// Inverse through the abelianized matrix; throws if that is not
  /// unimodular.
  GnEndomorphism inverse() const;

private:
  std::vector<GnElement> images_;
};

/// Right action of the frame generators of B~_n on G(n).
class GnAction {
public:
  explicit GnAction(int n);

  int n() const { return n_; }
  /// g_{X_i} for sign +1, g_{X_i^-1} for sign -1.
  GnElement act(const GnElement &g, int i, int sign) const;
  /// Letterwise, left to right: g_{w1 w2} = (g_{w1})_{w2}.
  GnElement act_word(const GnElement &g, const BraidWord &w) const;

  const GnEndomorphism &forward(int i) const { return forward_.at(i - 1); }
  const GnEndomorphism &backward(int i) const { return backward_.at(i - 1); }

private:
  int n_;
  std::vector<GnEndomorphism> forward_;
  std::vector<GnEndomorphism> backward_;
};

/// Table image of generator slot under X_i.
GnElement generator_action_image(int i, int slot, int n);

/// s_ij evaluated from its product formula, 1 <= i < j <= n.
GnElement s_ij(int i, int j, int n);

}  // namespace tbn
