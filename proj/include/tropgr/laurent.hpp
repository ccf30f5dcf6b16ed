#pragma once

#include <map>

#include "tropgr/pairs.hpp"
#include "tropgr/puiseux.hpp"

namespace tropgr {

// Exponent vector over pair-indexed variables; zero entries are never stored.
using ExpVec = std::map<Pair, int>;

// Laurent polynomial in the variables u_kl with ValuedCoeff coefficients.
// Zero coefficients are never stored; arithmetic is exact.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const ValuedCoeff& c);
  static LaurentPoly variable(const Pair& p, int exp = 1);
  static LaurentPoly monomial(const ValuedCoeff& c, const ExpVec& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, ValuedCoeff>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o);

  LaurentPoly pow(int k) const;  // k >= 0

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  void add_term(const ExpVec& e, const ValuedCoeff& c);

 private:
  std::map<ExpVec, ValuedCoeff> terms_;
};

}  // namespace tropgr
