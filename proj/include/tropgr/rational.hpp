#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "tropgr/errors.hpp"

namespace tropgr {

// Exact rational number; thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design
  Rat(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "a", "a/b", and decimal "a.b", each with an optional sign.
  static Rat parse(const std::string& s);
  static bool try_parse(const std::string& s, Rat& out);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  std::string to_string() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline bool Rat::try_parse(const std::string& s, Rat& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string intpart;
  while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
  mpq_class v;
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::string den;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
    if (den.empty() || i != s.size()) return false;
    mpz_class d(den, 10);
    if (d == 0) return false;
    v = mpq_class(mpz_class(intpart, 10), d);
  } else if (i < s.size() && s[i] == '.') {
    ++i;
    std::string frac;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) frac += s[i++];
    if (frac.empty() || i != s.size()) return false;
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    v = mpq_class(mpz_class(intpart + frac, 10), scale);
  } else {
    if (i != s.size()) return false;
    v = mpq_class(mpz_class(intpart, 10));
  }
  v.canonicalize();
  if (neg) v = -v;
  out = Rat(std::move(v));
  return true;
}

inline Rat Rat::parse(const std::string& s) {
  Rat out;
  if (!try_parse(s, out)) throw SyntaxError("invalid rational literal '" + s + "'", 0);
  return out;
}

}  // namespace tropgr
