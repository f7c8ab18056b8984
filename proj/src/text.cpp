#include "tbn/text.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "tbn/error.hpp"

namespace tbn::text {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view tok, const char *what) {
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+')
    body.remove_prefix(1);
  Int v{};
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size())
    throw InputError(std::string("bad ") + what + " token '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k)
    if (k == s.size() || s[k] == sep) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  return out;
}

}  // namespace

BraidWord parse_word(std::string_view s, int n) {
  require(n >= 2, "n must be at least 2");
  std::vector<int> letters;
  std::size_t k = 0;
  while (k < s.size()) {
    if (is_space(s[k])) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < s.size() && !is_space(s[end]))
      ++end;
    const std::string_view tok = s.substr(k, end - k);
    const int letter = parse_int<int>(tok, "word");
    if (letter == 0 || letter >= n || letter <= -n)
      throw InputError("word token '" + std::string(tok) + "' out of range for n=" +
                       std::to_string(n));
    letters.push_back(letter);
    k = end;
  }
  return BraidWord(n, std::move(letters));
}

std::string format_word(const BraidWord &w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(l);
  }
  return out;
}

GnElement parse_element(std::string_view s, int n) {
  s = trim(s);
  const auto semi = s.find(';');
  if (semi == std::string_view::npos)
    throw InputError("element '" + std::string(s) + "' has no ';'");
  const std::string_view bit_tok = trim(s.substr(0, semi));
  const int bit = parse_int<int>(bit_tok, "bit");
  if (bit != 0 && bit != 1)
    throw InputError("bit token '" + std::string(bit_tok) + "' is not 0 or 1");
  const auto parts = split(s.substr(semi + 1), ',');
  if (static_cast<int>(parts.size()) != n)
    throw InputError("element '" + std::string(s) + "' has " + std::to_string(parts.size()) +
                     " coordinates, expected " + std::to_string(n));
  GnElement g = GnElement::identity(n);
  g.bit = bit;
  for (int k = 0; k < n; ++k)
    g.vec[k] = parse_int<std::int64_t>(parts[k], "coordinate");
  return g;
}

std::string format_element(const GnElement &g) {
  std::string out = std::to_string(g.bit) + ';';
  for (std::size_t k = 0; k < g.vec.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string(g.vec[k]);
  }
  return out;
}

HalfTwist parse_half_twist(std::string_view s, int n) {
  const auto parts = split(trim(s), '|');
  if (parts.size() != 3)
    throw InputError("half-twist '" + std::string(s) + "' is not of the form i|w|+-");
  const int index = parse_int<int>(parts[0], "half-twist index");
  if (index < 1 || index >= n)
    throw InputError("half-twist index '" + std::string(parts[0]) + "' out of range for n=" +
                     std::to_string(n));
  bool reversed;
  if (parts[2] == "+")
    reversed = false;
  else if (parts[2] == "-")
    reversed = true;
  else
    throw InputError("polarization token '" + std::string(parts[2]) + "' is not + or -");
  return HalfTwist{parse_word(parts[1], n), index, reversed};
}

std::string format_half_twist(const HalfTwist &h) {
  return std::to_string(h.index) + '|' + format_word(h.conj) + '|' + (h.reversed ? '-' : '+');
}

Json normal_form_json(const NormalForm &nf, bool with_n) {
  Json j = Json::object();
  if (with_n)
    j["n"] = nf.n();
  j["perm"] = nf.perm.one_line();
  j["bit"] = nf.g.bit;
  j["vec"] = nf.g.vec;
  return j;
}

Json report_json(const PrimeReport &r) {
  Json j = Json::object();
  j["verdict"] = to_string(r.verdict);
  Json conds = Json::object();
  for (const auto &[id, ok] : r.conditions)
    conds[id] = ok;
  j["conditions"] = conds;
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  j["seed"] = r.seed;
  if (r.witness.empty() && r.failed.empty()) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::object();
    if (!r.failed.empty())
      w["failed"] = r.failed;
    for (const auto &[k, v] : r.witness)
      w[k] = v;
    j["witness"] = w;
  }
  return j;
}

Json relation_json(const PairRelation &r) {
  Json j = Json::object();
  j["commute"] = r.commute;
  j["triple"] = r.triple;
  j["common_endpoints"] = r.common_endpoints;
  j["label"] = r.label();
  return j;
}

Json matrix_json(const IntMatrix &m) { return Json(m); }

Json suite_json(const std::string &name, const SuiteReport &r) {
  Json j = Json::object();
  j["suite"] = name;
  j["verdict"] = r.ok() ? "pass" : "fail";
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  Json checks = Json::object();
  for (const auto &[id, c] : r.checks)
    checks[id] = {{"passed", c.first}, {"total", c.second}};
  j["checks"] = checks;
  j["failures"] = r.failures;
  return j;
}

}  // namespace tbn::text
