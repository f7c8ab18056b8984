#pragma once

#include <cstdint>
#include <vector>

#include "tbn/braid.hpp"
#include "tbn/gn.hpp"

namespace tbn {

/// Complete invariant of an element of B~_n: the element equals
/// tits_lift(perm) * Lambda^-1(g).
struct NormalForm {
  Perm perm;
  GnElement g;

  int n() const { return perm.n(); }
  bool is_identity() const { return perm.is_identity() && g.is_identity(); }
  friend bool operator==(const NormalForm &, const NormalForm &) = default;
};

struct DegreeDecomposition {
  std::int64_t length = 0;  // inversions of the permutation
  std::int64_t a0 = 0;      // s_1 exponent
  std::vector<std::int64_t> v;
  int bit = 0;
};

/// Decision procedures for B~_n, n >= 4.
///
/// normal_form scans a word left to right keeping (pi, g) with the prefix
/// equal to tits_lift(pi) * Lambda^-1(g) in B~_n. A letter X_i^e first acts
/// on g, then, when the Tits part absorbs or releases a square X_i^{+-2},
/// multiplies Lambda(X_i^2) = s_{i,i+1} (or its inverse) on the left.
/// Completeness of the invariant rests on Lambda being an isomorphism of
/// the pure part onto G(n).
/// sum over i < j of lk[i][j] * ab(s_ij): the abelian part of Lambda as
/// predicted by the pairwise linking numbers of a pure braid.
std::vector<std::int64_t> linking_coordinates(const IntMatrix &lk);

class Quotient {
public:
  explicit Quotient(int n);

  int n() const { return n_; }
  const GnAction &action() const { return action_; }
  /// Entry i (1-based) is Lambda(X_i^2) = s_{i,i+1}.
  const GnElement &square(int i) const { return squares_.at(i - 1); }
  const std::vector<GnElement> &squares() const { return squares_; }

  NormalForm normal_form(const BraidWord &w) const;
  bool equal(const BraidWord &a, const BraidWord &b) const;
  bool in_kernel(const BraidWord &w) const;
  /// Pure word whose normal form is (identity, g).
  BraidWord lift(const GnElement &g) const;
  /// tits_lift(perm) followed by lift(g).
  BraidWord word_of(const NormalForm &nf, bool reverse_sweeps = false) const;
  NormalForm multiply(const NormalForm &a, const NormalForm &b) const;
  NormalForm inverse(const NormalForm &a) const;
  DegreeDecomposition degree_decomposition(const BraidWord &w) const;

  /// Lambda of a pure word; throws InputError when w is not pure.
  GnElement lambda(const BraidWord &w) const;

private:
  int n_;
  GnAction action_;
  std::vector<GnElement> squares_;
};

}  // namespace tbn
