#pragma once

#include <map>
#include <set>
#include <string>

#include "tropgr/extrat.hpp"
#include "tropgr/pairs.hpp"

namespace tropgr {

// Point of tropical projective space indexed by pairs, stored as the
// representative with value 0 at the lexicographically least finite pair.
class TropPoint {
 public:
  TropPoint(int n, const std::map<Pair, ExtRat>& entries);

  int n() const { return n_; }
  const ExtRat& at(const Pair& p) const;
  bool finite(const Pair& p) const { return at(p).finite(); }
  const Pair& anchor() const { return anchor_; }
  const std::map<Pair, ExtRat>& entries() const { return e_; }

  // Coordinates relative to a chosen finite pair: x_kl - x_ij.
  ExtRat rel(const Pair& kl, const Pair& ij) const;

  bool operator==(const TropPoint& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const TropPoint& o) const { return !(*this == o); }

 private:
  int n_;
  std::map<Pair, ExtRat> e_;
  Pair anchor_;
};

std::set<Pair> vanishing_set(const TropPoint& x);

// JSON codec: {"n": int, "entries": {"i,j": "<rational>" | "-inf", ...}}.
// All C(n,2) keys must be present. Throws SyntaxError with a byte offset.
TropPoint parse_metric_json(const std::string& text);
std::string metric_to_json(const TropPoint& x);

}  // namespace tropgr
