#include "tbn/freegroup.hpp"

#include <cstdlib>
#include <string>

#include "tbn/error.hpp"

namespace tbn {

void require(bool cond, const std::string &msg) {
  if (!cond)
    throw InputError(msg);
}

namespace {

// Appends `letter` to an already reduced word, cancelling against its tail.
void push_reduced(std::vector<int> &out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(int n) : n_(n) {
  require(n >= 1, "free group rank must be >= 1");
}

FreeWord FreeWord::reduce(std::span<const int> raw, int n) {
  FreeWord w(n);
  w.letters_.reserve(raw.size());
  for (int letter : raw) {
    require(letter != 0 && std::abs(letter) <= n,
            "free letter " + std::to_string(letter) + " out of range for rank " +
                std::to_string(n));
    push_reduced(w.letters_, letter);
  }
  return w;
}

FreeWord FreeWord::generator(int k, int n) {
  const int raw[] = {k};
  return reduce(raw, n);
}

FreeWord FreeWord::inverse() const {
  FreeWord w(n_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int &letter : w.letters_)
    letter = -letter;
  return w;
}

FreeWord operator*(const FreeWord &a, const FreeWord &b) {
  require(a.n_ == b.n_, "free words over different alphabets");
  FreeWord w = a;
  for (int letter : b.letters_)
    push_reduced(w.letters_, letter);
  return w;
}

FreeWord substitute(std::span<const FreeWord> images, const FreeWord &w) {
  require(images.size() == static_cast<std::size_t>(w.n()),
          "substitution needs one image per generator");
  const int target_n = images.empty() ? 1 : images.front().n();
  FreeWord out(target_n);
  std::vector<int> letters;
  for (int letter : w.letters()) {
    const FreeWord &img = images[std::abs(letter) - 1];
    require(img.n() == target_n, "substitution images over different alphabets");
    if (letter > 0) {
      for (int x : img.letters())
        push_reduced(letters, x);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        push_reduced(letters, -*it);
    }
  }
  return FreeWord::reduce(letters, target_n);
}

std::vector<FreeWord> identity_images(int n) {
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int k = 1; k <= n; ++k)
    images.push_back(FreeWord::generator(k, n));
  return images;
}

}  // namespace tbn
