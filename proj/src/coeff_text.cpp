#include "tropgr/coeff_text.hpp"

#include <cctype>

#include "tropgr/errors.hpp"

namespace tropgr {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

struct CoeffParser {
  const std::string& s;
  std::size_t pos;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos); }

  // Number literal: digits with an optional decimal part. '/' is left to the
  // expression level as the division operator.
  Rat number() {
    ws();
    std::size_t start = pos;
    if (pos >= s.size() || !is_digit(s[pos])) fail("expected number");
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      if (pos >= s.size() || !is_digit(s[pos])) fail("expected digits");
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
    Rat out;
    std::string lit = s.substr(start, pos - start);
    if (!Rat::try_parse(lit, out)) fail("invalid number '" + lit + "'");
    return out;
  }

  // Exponent literal: optional sign, digits, optional '/digits'.
  Rat exponent_rat() {
    ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    Rat num = number();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      Rat den = number();
      num = num / den;
    }
    return neg ? -num : num;
  }

  long integer_exponent(const Rat& e) {
    if (e.raw().get_den() != 1 || !e.raw().get_num().fits_slong_p())
      fail("exponent must be an integer here");
    return e.raw().get_num().get_si();
  }

  ValuedCoeff primary() {
    ws();
    if (pos >= s.size()) fail("expected value");
    ValuedCoeff base;
    bool base_is_t = false;
    if (s[pos] == '(') {
      ++pos;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (s[pos] == 't') {
      ++pos;
      base = ValuedCoeff::t_power(Rat(1));
      base_is_t = true;
    } else if (is_digit(s[pos])) {
      base = ValuedCoeff(number());
    } else {
      fail("unexpected character");
    }
    ws();
    if (eat('^')) {
      ws();
      Rat e;
      if (pos < s.size() && s[pos] == '(') {
        ++pos;
        e = exponent_rat();
        if (!eat(')')) fail("expected ')'");
      } else {
        e = exponent_rat();
        if (e.raw().get_den() != 1) fail("fractional exponent needs parentheses");
      }
      if (base_is_t) return ValuedCoeff::t_power(e);
      return base.pow(integer_exponent(e));
    }
    return base;
  }

  ValuedCoeff factor() {
    ws();
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      ws();
    }
    ValuedCoeff v = primary();
    return sign < 0 ? -v : v;
  }

  ValuedCoeff term() {
    ValuedCoeff v = factor();
    for (;;) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  ValuedCoeff expr() {
    ValuedCoeff v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
};

}  // namespace

ValuedCoeff parse_coeff(const std::string& text) {
  CoeffParser p{text, 0};
  ValuedCoeff v = p.expr();
  p.ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return v;
}

ValuedCoeff parse_coeff_factor(const std::string& text, std::size_t& pos) {
  CoeffParser p{text, pos};
  ValuedCoeff v = p.primary();
  pos = p.pos;
  return v;
}

std::string print_puiseux(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = c.abs();
    std::string piece;
    if (e == Rat(0)) {
      piece = mag.to_string();
    } else {
      std::string tp = (e == Rat(1)) ? "t" : "t^(" + e.to_string() + ")";
      piece = (mag == Rat(1)) ? tp : mag.to_string() + "*" + tp;
    }
    if (first) {
      out += (c.sign() < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

std::string print_coeff(const ValuedCoeff& c) {
  if (c.is_zero()) return "0";
  if (c.denominator() == PuiseuxPoly::constant(Rat(1))) return print_puiseux(c.numerator());
  std::string num = print_puiseux(c.numerator());
  if (c.numerator().terms().size() > 1) num = "(" + num + ")";
  return num + "/(" + print_puiseux(c.denominator()) + ")";
}

}  // namespace tropgr
