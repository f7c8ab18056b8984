#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tbn/braid.hpp"
#include "tbn/gn.hpp"
#include "tbn/primes.hpp"

namespace tbn {

/// Invariant groups runnable by name; "all" runs every suite in order.
const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);

/// Runs one named suite on n strands with `cases` random cases per
/// randomized check. Exhaustive checks ignore `cases`.
SuiteReport run_suite(const std::string &name, int n, int cases, std::uint64_t seed);

// Random generators shared with the tests.
Perm random_perm(std::mt19937_64 &rng, int n);
/// Reduced word of p picking a random descent at every step.
BraidWord random_reduced_lift(std::mt19937_64 &rng, const Perm &p);
/// w * tits_lift(psi(w))^-1 for a random w.
BraidWord random_pure_word(std::mt19937_64 &rng, int n, int max_length);
GnElement random_element(std::mt19937_64 &rng, int n, int spread = 3);

}  // namespace tbn
