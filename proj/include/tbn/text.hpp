#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tbn/braid.hpp"
#include "tbn/gn.hpp"
#include "tbn/primes.hpp"
#include "tbn/quotient.hpp"

// Text formats shared by the CLI and the bindings. Parse errors throw
// InputError naming the offending token.
namespace tbn::text {

using Json = nlohmann::ordered_json;

/// Whitespace-separated signed generator indices; "" is the identity.
BraidWord parse_word(std::string_view s, int n);
std::string format_word(const BraidWord &w);

/// "bit;v0,v1,...,v{n-1}".
GnElement parse_element(std::string_view s, int n);
std::string format_element(const GnElement &g);

/// "i|w|+" or "i|w|-": frame index, conjugator word, polarization
/// ("-" reverses the endpoint order).
HalfTwist parse_half_twist(std::string_view s, int n);
std::string format_half_twist(const HalfTwist &h);

/// {"n","perm","bit","vec"}; `with_n` drops the leading "n" when false.
Json normal_form_json(const NormalForm &nf, bool with_n = true);
/// {"verdict","conditions","bound","seed","witness"}.
Json report_json(const PrimeReport &r);
/// {"commute","triple","common_endpoints","label"}.
Json relation_json(const PairRelation &r);
Json matrix_json(const IntMatrix &m);
Json suite_json(const std::string &name, const SuiteReport &r);

}  // namespace tbn::text
