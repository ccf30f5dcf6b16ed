#include "tropgr/puiseux.hpp"

#include <cstdlib>
#include <vector>

#include "tropgr/errors.hpp"

namespace tropgr {

PuiseuxPoly PuiseuxPoly::term(const Rat& c, const Rat& e) {
  PuiseuxPoly p;
  if (!c.is_zero()) p.t_[e] = c;
  return p;
}

Rat PuiseuxPoly::ord() const { return t_.begin()->first; }
Rat PuiseuxPoly::top() const { return t_.rbegin()->first; }

Rat PuiseuxPoly::coeff_at(const Rat& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out = a;
  for (const auto& [e, c] : b.t_) {
    Rat s = out.coeff_at(e) + c;
    if (s.is_zero())
      out.t_.erase(e);
    else
      out.t_[e] = s;
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly out;
  for (const auto& [e, c] : t_) out.t_[e] = -c;
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      Rat e = ea + eb;
      Rat s = out.coeff_at(e) + ca * cb;
      if (s.is_zero())
        out.t_.erase(e);
      else
        out.t_[e] = s;
    }
  }
  return out;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const Rat& c) {
  PuiseuxPoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, k] : a.t_) out.t_[e] = k * c;
  return out;
}

PuiseuxPoly PuiseuxPoly::shifted(const Rat& e) const {
  PuiseuxPoly out;
  for (const auto& [k, c] : t_) out.t_[k + e] = c;
  return out;
}

namespace {

// Dense univariate polynomials over Q, used only for gcd reduction.
using Dense = std::vector<Rat>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense divmod(Dense a, const Dense& b, Dense* quot) {
  if (quot) quot->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
    if (a.size() < b.size()) break;
  }
  if (quot) trim(*quot);
  return a;  // remainder
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rat lead = a.back();
  for (auto& c : a) c = c / lead;
  return a;
}

Dense exact_div(const Dense& a, const Dense& b) {
  Dense q;
  divmod(a, b, &q);
  return q;
}

mpz_class exponent_denominator_lcm(const PuiseuxPoly& p, mpz_class acc) {
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    mpz_class den = e.raw().get_den();
    acc = lcm(acc, den);
  }
  return acc;
}

// p = t^(ord) * P(t^(1/d)); returns the dense coefficients of P in s = t^(1/d)
// along with ord*d as an integer.
Dense to_dense(const PuiseuxPoly& p, const mpz_class& d, mpz_class* ord_scaled) {
  mpq_class o = p.ord().raw() * d;
  *ord_scaled = o.get_num();  // o is integral by choice of d
  Dense out;
  for (const auto& [e, c] : p.terms()) {
    mpq_class idx = e.raw() * d - o;
    std::size_t i = idx.get_num().get_ui();
    if (out.size() <= i) out.resize(i + 1, Rat(0));
    out[i] = c;
  }
  return out;
}

PuiseuxPoly from_dense(const Dense& p, const mpz_class& d, const mpz_class& ord_scaled) {
  PuiseuxPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    mpq_class e(ord_scaled + static_cast<long>(i), d);
    e.canonicalize();
    out = out + PuiseuxPoly::term(p[i], Rat(e));
  }
  return out;
}

}  // namespace

ValuedCoeff::ValuedCoeff(PuiseuxPoly num, PuiseuxPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("coefficient with zero denominator");
  canonicalize();
}

void ValuedCoeff::canonicalize() {
  if (num_.is_zero()) {
    den_ = PuiseuxPoly::constant(Rat(1));
    return;
  }
  mpz_class d = exponent_denominator_lcm(den_, exponent_denominator_lcm(num_, 1));
  mpz_class na, db;
  Dense n = to_dense(num_, d, &na);
  Dense dn = to_dense(den_, d, &db);
  Dense g = gcd(n, dn);
  if (g.size() > 1) {
    n = exact_div(n, g);
    dn = exact_div(dn, g);
  }
  Rat lead = dn.back();
  for (auto& c : n) c = c / lead;
  for (auto& c : dn) c = c / lead;
  num_ = from_dense(n, d, na - db);
  den_ = from_dense(dn, d, 0);
}

ValuedCoeff operator+(const ValuedCoeff& a, const ValuedCoeff& b) {
  return ValuedCoeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ValuedCoeff operator-(const ValuedCoeff& a, const ValuedCoeff& b) { return a + (-b); }

ValuedCoeff ValuedCoeff::operator-() const {
  ValuedCoeff out = *this;
  out.num_ = -out.num_;
  return out;
}

ValuedCoeff operator*(const ValuedCoeff& a, const ValuedCoeff& b) {
  return ValuedCoeff(a.num_ * b.num_, a.den_ * b.den_);
}

ValuedCoeff operator/(const ValuedCoeff& a, const ValuedCoeff& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero coefficient");
  return ValuedCoeff(a.num_ * b.den_, a.den_ * b.num_);
}

ValuedCoeff ValuedCoeff::pow(long k) const {
  if (k < 0) return ValuedCoeff::one() / pow(-k);
  ValuedCoeff out = ValuedCoeff::one();
  for (long i = 0; i < k; ++i) out = out * *this;
  return out;
}

}  // namespace tropgr
