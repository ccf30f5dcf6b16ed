#pragma once

#include <array>
#include <set>
#include <vector>

#include "tropgr/puiseux.hpp"
#include "tropgr/trop_point.hpp"

namespace tropgr {

// 2 x n matrix over the coefficient field; columns are indexed 1..n.
struct PluckerMatrix {
  int n = 0;
  std::vector<ValuedCoeff> row0, row1;

  PluckerMatrix(int nn) : n(nn), row0(nn), row1(nn) {}
  ValuedCoeff& at(int r, int col) { return (r == 0 ? row0 : row1)[col - 1]; }
  const ValuedCoeff& at(int r, int col) const { return (r == 0 ? row0 : row1)[col - 1]; }
  // Minor with columns ordered k < l.
  ValuedCoeff minor(const Pair& kl) const {
    return at(0, kl.a) * at(1, kl.b) - at(0, kl.b) * at(1, kl.a);
  }
};

// Coordinatewise log-abs of the Plücker minors. Throws RankDeficient when
// every minor vanishes.
TropPoint trop_pluecker(const PluckerMatrix& M);

struct QuartetClass {
  enum Kind { cherry, star, violation } kind;
  // For cherry: the two pair groups realizing the strictly minimal sum.
  Pair group1{1, 2}, group2{1, 2};
};

// Four-point classification of one quartet: sums s1 = x_ab + x_cd,
// s2 = x_ac + x_bd, s3 = x_ad + x_bc over the sorted quartet a<b<c<d.
QuartetClass quartet_classify(const TropPoint& x, std::array<int, 4> quartet);

struct Verdict {
  bool ok = true;
  std::array<int, 4> witness{0, 0, 0, 0};  // lexicographically first violation
};

Verdict validate_point(const TropPoint& x);

// Saturation conditions for a vanishing set relative to the anchor ij:
// (i) kl,ls in J and ks != ij imply ks in J or {il,jl} subset J;
// (ii) ik,jk in J imply kl in J for all l.
bool is_saturated(const std::set<Pair>& J, const Pair& ij, int n);

// Rank-2 matrix whose tropical Plücker vector has vanishing set exactly J:
// zero columns on Z0(J) = {l : il,jl in J}, one direction per class of the
// relation k~l iff kl in J, distinct directions across classes.
PluckerMatrix realize_stratum(const std::set<Pair>& J, const Pair& ij, int n);

// One relation p_ij p_kl - p_ik p_jl + p_il p_jk per 4-subset i<j<k<l.
struct ThreeTerm {
  std::array<int, 4> quartet;
  std::array<std::array<Pair, 2>, 3> monomials;
  std::array<int, 3> signs;
};

std::vector<ThreeTerm> three_term_relations(int n);

}  // namespace tropgr
