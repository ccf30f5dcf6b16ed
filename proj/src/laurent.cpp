#include "tropgr/laurent.hpp"

namespace tropgr {

LaurentPoly LaurentPoly::constant(const ValuedCoeff& c) {
  return monomial(c, {});
}

LaurentPoly LaurentPoly::variable(const Pair& p, int exp) {
  ExpVec e;
  if (exp != 0) e[p] = exp;
  return monomial(ValuedCoeff::one(), e);
}

LaurentPoly LaurentPoly::monomial(const ValuedCoeff& c, const ExpVec& e) {
  LaurentPoly f;
  f.add_term(e, c);
  return f;
}

void LaurentPoly::add_term(const ExpVec& e, const ValuedCoeff& c) {
  if (c.is_zero()) return;
  ExpVec key;
  for (const auto& [p, k] : e)
    if (k != 0) key.emplace(p, k);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += -b;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e = ea;
      for (const auto& [p, k] : eb) {
        int v = (e[p] += k);
        if (v == 0) e.erase(p);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  LaurentPoly r = constant(ValuedCoeff::one());
  LaurentPoly base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

}  // namespace tropgr
