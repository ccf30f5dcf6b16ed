#include "tropgr/poly_text.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "tropgr/coeff_text.hpp"
#include "tropgr/errors.hpp"

namespace tropgr {

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw SyntaxError(msg, at);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  // A variable factor starts with "u_"; a lone 'u' anywhere else is an error
  // caught by the factor dispatch.
  bool at_variable() {
    skip_ws();
    return pos + 1 < s.size() && s[pos] == 'u' && s[pos + 1] == '_';
  }

  long parse_int_after_caret() {
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer exponent", pos);
    long v = 0;
    for (std::size_t k = start; k < pos; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000000) fail("exponent too large", start);
    }
    return neg ? -v : v;
  }

  int parse_index() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected leaf index", pos);
    long v = 0;
    for (std::size_t k = start; k < pos; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000000) fail("leaf index too large", start);
    }
    return static_cast<int>(v);
  }

  // u_<i>_<j> with optional ^exponent; u_j_i aliases u_i_j.
  void parse_variable(ExpVec& exps) {
    std::size_t start = pos;
    pos += 2;  // "u_"
    int a = parse_index();
    if (pos >= s.size() || s[pos] != '_') fail("expected '_' in variable", pos);
    ++pos;
    int b = parse_index();
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      long e = parse_int_after_caret();
      if (e < -1000 || e > 1000) fail("exponent out of range", start);
      exp = static_cast<int>(e);
    }
    Pair p(1, 2);
    try {
      p = Pair(a, b);
    } catch (const IncompatibleInputs&) {
      fail("invalid variable indices", start);
    }
    int v = (exps[p] += exp);
    if (v == 0) exps.erase(p);
  }

  // term := factor { '*' factor }
  void parse_term(ExpVec& exps, ValuedCoeff& coeff) {
    exps.clear();
    coeff = ValuedCoeff::one();
    while (true) {
      skip_ws();
      if (pos >= s.size()) fail("expected factor", pos);
      if (at_variable()) {
        parse_variable(exps);
      } else {
        coeff = coeff * parse_coeff_factor(s, pos);
      }
      std::size_t save = pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      pos = save;
      return;
    }
  }

  LaurentPoly parse() {
    LaurentPoly f;
    skip_ws();
    if (pos >= s.size()) fail("empty polynomial", pos);
    bool negate = false;
    if (s[pos] == '-') {
      negate = true;
      ++pos;
    }
    while (true) {
      ExpVec e;
      ValuedCoeff c;
      parse_term(e, c);
      f.add_term(e, negate ? -c : c);
      skip_ws();
      if (pos >= s.size()) return f;
      if (s[pos] == '+')
        negate = false;
      else if (s[pos] == '-')
        negate = true;
      else
        fail("expected '+' or '-'", pos);
      ++pos;
    }
  }
};

// A coefficient magnitude embeds safely in a term only if it contains no
// top-level space, sign, or slash; otherwise it is parenthesized.
bool needs_parens(const std::string& c) {
  int depth = 0;
  for (char ch : c) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ' ' || ch == '+' || ch == '-' || ch == '/')) return true;
  }
  return false;
}

std::string print_term(const ExpVec& e, const ValuedCoeff& mag) {
  std::string out;
  if (!(mag == ValuedCoeff::one()) || e.empty()) {
    std::string c = print_coeff(mag);
    out = needs_parens(c) ? "(" + c + ")" : c;
  }
  for (const auto& [p, k] : e) {
    if (!out.empty()) out += "*";
    out += "u_" + std::to_string(p.a) + "_" + std::to_string(p.b);
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  PolyParser p(text);
  LaurentPoly f = p.parse();
  p.skip_ws();
  if (p.pos < p.s.size()) throw SyntaxError("trailing input", p.pos);
  return f;
}

std::string print_poly(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.residue_leading().sign() < 0;
    ValuedCoeff mag = neg ? -c : c;
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += print_term(e, mag);
  }
  return out;
}

}  // namespace tropgr
