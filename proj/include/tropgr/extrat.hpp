#pragma once

#include <string>

#include "tropgr/errors.hpp"
#include "tropgr/rational.hpp"

namespace tropgr {

// Rational extended by -inf: the value set of log-scale tropical coordinates.
// -inf is absorbing for + and the bottom element of the order.
class ExtRat {
 public:
  ExtRat() : fin_(true), v_() {}
  explicit ExtRat(Rat r) : fin_(true), v_(std::move(r)) {}
  static ExtRat neg_inf() {
    ExtRat e;
    e.fin_ = false;
    return e;
  }

  bool finite() const { return fin_; }
  const Rat& value() const { return v_; }  // pre: finite()

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (!a.fin_ || !b.fin_) return neg_inf();
    return ExtRat(a.v_ + b.v_);
  }
  ExtRat& operator+=(const ExtRat& o) { return *this = *this + o; }
  friend ExtRat operator-(const ExtRat& a, const Rat& b) {
    if (!a.fin_) return neg_inf();
    return ExtRat(a.v_ - b);
  }

  // k * x under the max-formula conventions: 0 * (-inf) = 0, and a negative
  // exponent never legally meets a -inf coordinate.
  ExtRat times(long k) const {
    if (k == 0) return ExtRat(Rat(0));
    if (fin_) return ExtRat(Rat(k) * v_);
    if (k > 0) return neg_inf();
    throw LocalizationViolation("negative exponent on a -inf coordinate");
  }

  friend ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.fin_ != b.fin_) return false;
    return !a.fin_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (!a.fin_) return b.fin_;
    if (!b.fin_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  std::string to_string() const { return fin_ ? v_.to_string() : "-inf"; }
  static bool try_parse(const std::string& s, ExtRat& out) {
    if (s == "-inf") {
      out = neg_inf();
      return true;
    }
    Rat r;
    if (!Rat::try_parse(s, r)) return false;
    out = ExtRat(r);
    return true;
  }

 private:
  bool fin_;
  Rat v_;
};

}  // namespace tropgr
