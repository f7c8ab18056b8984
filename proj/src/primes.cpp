#include "tbn/primes.hpp"

#include <string>

#include "tbn/quotient.hpp"

namespace tbn {

GnInstance::GnInstance(int n, bool degree_zero) : action_(n), degree_zero_(degree_zero) {}

std::vector<GnElement> GnInstance::generators() const {
  std::vector<GnElement> gens;
  if (!degree_zero_)
    gens.push_back(GnElement::s1(n()));
  for (int i = 1; i <= n() - 1; ++i)
    gens.push_back(GnElement::u(i, n()));
  gens.push_back(GnElement::nu(n()));
  return gens;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

BraidWord random_word(std::mt19937_64 &rng, int n, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters(len(rng));
  for (int &l : letters)
    l = neg(rng) ? -gen(rng) : gen(rng);
  return BraidWord(n, std::move(letters));
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::PassUpToBound:
    return "pass-up-to-bound";
  }
  return "fail";
}

BraidWord transport_word(const HalfTwist &source, const HalfTwist &target) {
  require(source.n() == target.n(), "transport: half-twists have different n");
  BraidWord b = source.conj.inverse() * frame_transport(source.index, target.index, source.n()) *
                target.conj;
  if (ht_endpoints(ht_conjugate(source, b)) != ht_endpoints(target))
    b *= ht_word(target);
  if (ht_endpoints(ht_conjugate(source, b)) != ht_endpoints(target))
    throw InternalError("transport: polarization could not be matched");
  return b;
}

std::vector<BraidWord> polarized_centralizer_generators(int i, int n) {
  require(i >= 1 && i <= n - 1, "centralizer: index out of range");
  std::vector<BraidWord> frame{BraidWord(n, {1, 1})};
  if (n >= 3)
    frame.push_back(BraidWord(n, {2, 1, 1, 2}));
  for (int j = 3; j <= n - 1; ++j)
    frame.push_back(BraidWord(n, {j}));
  const BraidWord t = frame_transport(1, i, n);
  std::vector<BraidWord> out;
  for (const auto &g : frame)
    out.push_back(conjugate(g, t));
  return out;
}

// (X_1^2)_{X_2^-1} X_2^-2.
BraidWord canonical_prime_word(int n) { return BraidWord(n, {2, 1, 1, -2, -2, -2}); }

PolarizedPair<GnElement> canonical_prime(int n) {
  const Quotient q(n);
  const GnInstance grp(n);
  return make_pair(grp, q.lambda(canonical_prime_word(n)), HalfTwist::frame(1, n));
}

}  // namespace tbn
