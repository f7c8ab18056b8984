#pragma once

#include <span>
#include <vector>

namespace tbn {

/// Freely reduced word in the free group on letters 1..n. A letter is a
/// signed index; -k stands for the inverse of generator k.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(int n);

  /// Validates and freely reduces `raw`.
  static FreeWord reduce(std::span<const int> raw, int n);
  static FreeWord generator(int k, int n);

  int n() const { return n_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord &a, const FreeWord &b);
  friend bool operator==(const FreeWord &, const FreeWord &) = default;
  friend auto operator<=>(const FreeWord &, const FreeWord &) = default;

private:
  int n_ = 1;
  std::vector<int> letters_;
};

/// Substitution homomorphism: letter k goes to images[k-1], letter -k to its
/// inverse. The result is reduced.
FreeWord substitute(std::span<const FreeWord> images, const FreeWord &w);

/// images[k-1] = generator k, for every k.
std::vector<FreeWord> identity_images(int n);

}  // namespace tbn
