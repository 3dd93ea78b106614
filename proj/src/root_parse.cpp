#include "orthoposet/root_parse.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orthoposet {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw std::invalid_argument("cannot parse root \"" + text + "\": " + why);
}

}  // namespace

int parse_root(const RootSystem& rs, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad(text, "empty literal");

  char kind = 0;
  size_t pos = 0;
  std::vector<std::pair<int, int>> terms;  // (1-based index, coefficient)
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad(text, "expected '+' or '-' before position " + std::to_string(pos));
    }
    int coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        coeff = coeff * 10 + (s[pos++] - '0');
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'e'))
      bad(text, "expected a symbol a<k> or e<k>");
    char k = s[pos++];
    if (kind == 0) kind = k;
    if (kind != k) bad(text, "cannot mix a- and e-symbols in one root");
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      bad(text, "expected an index after '" + std::string(1, k) + "'");
    int idx = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      idx = idx * 10 + (s[pos++] - '0');
    terms.emplace_back(idx, sign * coeff);
  }

  RootVec coeffs;
  if (kind == 'a') {
    coeffs.assign(rs.rank(), 0);
    for (auto [idx, c] : terms) {
      if (idx < 1 || idx > rs.rank()) bad(text, "node index out of range");
      coeffs[idx - 1] += c;
    }
  } else {
    int dim = rs.dtype().family == Family::A ? rs.rank() + 1
              : rs.dtype().family == Family::D ? rs.rank()
                                               : -1;
    if (dim < 0) bad(text, "epsilon form is supported for types A and D only");
    std::vector<int> eps(dim, 0);
    for (auto [idx, c] : terms) {
      if (idx < 1 || idx > dim) bad(text, "epsilon index out of range");
      eps[idx - 1] += c;
    }
    try {
      coeffs = rs.eps_to_coeffs(eps);
    } catch (const std::exception& e) {
      bad(text, e.what());
    }
  }

  SignedRoot r = rs.lookup(coeffs);
  if (r == 0) bad(text, "not a root of " + rs.dtype().name());
  if (r < 0) bad(text, "not a positive root of " + rs.dtype().name());
  return root_index(r);
}

OrthoSet parse_root_list(const RootSystem& rs, const std::string& text) {
  OrthoSet set;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    if (!piece.empty() &&
        piece.find_first_not_of(" \t") != std::string::npos)
      set.push_back(parse_root(rs, piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  validate_orthoset(rs, set);
  return set;
}

}  // namespace orthoposet
