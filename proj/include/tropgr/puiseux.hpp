#pragma once

#include <map>
#include <string>

#include "tropgr/extrat.hpp"
#include "tropgr/rational.hpp"

namespace tropgr {

// Finite rational combination of rational powers of t; exponents may be
// negative. The term map never stores zero coefficients.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;  // zero
  static PuiseuxPoly constant(const Rat& c) { return term(c, Rat(0)); }
  static PuiseuxPoly t_power(const Rat& e) { return term(Rat(1), e); }
  static PuiseuxPoly term(const Rat& c, const Rat& e);

  bool is_zero() const { return t_.empty(); }
  const std::map<Rat, Rat>& terms() const { return t_; }
  Rat ord() const;  // min exponent; pre: nonzero
  Rat top() const;  // max exponent; pre: nonzero
  Rat coeff_at(const Rat& e) const;

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const Rat& c);
  PuiseuxPoly operator-() const;
  PuiseuxPoly shifted(const Rat& e) const;  // multiply by t^e

  bool operator==(const PuiseuxPoly& o) const { return t_ == o.t_; }
  bool operator!=(const PuiseuxPoly& o) const { return !(t_ == o.t_); }

 private:
  std::map<Rat, Rat> t_;
};

// Quotient of Puiseux polynomials in canonical form: numerator and
// denominator share no polynomial factor, the denominator has order 0 and
// top coefficient 1 (so the zero element is 0/1 and unit fractions collapse).
class ValuedCoeff {
 public:
  ValuedCoeff() : den_(PuiseuxPoly::constant(Rat(1))) {}
  explicit ValuedCoeff(const Rat& c)
      : num_(PuiseuxPoly::constant(c)), den_(PuiseuxPoly::constant(Rat(1))) {}
  explicit ValuedCoeff(PuiseuxPoly p)
      : num_(std::move(p)), den_(PuiseuxPoly::constant(Rat(1))) {}
  ValuedCoeff(PuiseuxPoly num, PuiseuxPoly den);

  static ValuedCoeff one() { return ValuedCoeff(Rat(1)); }
  static ValuedCoeff t_power(const Rat& e) { return ValuedCoeff(PuiseuxPoly::t_power(e)); }

  bool is_zero() const { return num_.is_zero(); }
  const PuiseuxPoly& numerator() const { return num_; }
  const PuiseuxPoly& denominator() const { return den_; }

  // log|c| in the max convention: -ord(c); -inf on zero.
  ExtRat log_abs() const {
    if (is_zero()) return ExtRat::neg_inf();
    return ExtRat(-num_.ord());
  }
  // Rational coefficient of the lowest-order term of the value; pre: nonzero.
  Rat residue_leading() const {
    return num_.coeff_at(num_.ord()) / den_.coeff_at(den_.ord());
  }

  friend ValuedCoeff operator+(const ValuedCoeff& a, const ValuedCoeff& b);
  friend ValuedCoeff operator-(const ValuedCoeff& a, const ValuedCoeff& b);
  friend ValuedCoeff operator*(const ValuedCoeff& a, const ValuedCoeff& b);
  friend ValuedCoeff operator/(const ValuedCoeff& a, const ValuedCoeff& b);
  ValuedCoeff operator-() const;
  ValuedCoeff pow(long k) const;
  ValuedCoeff& operator+=(const ValuedCoeff& o) { return *this = *this + o; }
  ValuedCoeff& operator*=(const ValuedCoeff& o) { return *this = *this * o; }

  bool operator==(const ValuedCoeff& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ValuedCoeff& o) const { return !(*this == o); }

 private:
  void canonicalize();
  PuiseuxPoly num_, den_;
};

}  // namespace tropgr
