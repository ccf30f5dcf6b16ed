#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropgr/coeff_text.hpp"
#include "tropgr/plucker.hpp"
#include "tropgr/trop_point.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace tropgr;

namespace {

ValuedCoeff C(const std::string& s) { return parse_coeff(s); }

PluckerMatrix matrix_from(const std::vector<std::string>& r0,
                          const std::vector<std::string>& r1) {
  PluckerMatrix M(static_cast<int>(r0.size()));
  for (int c = 1; c <= M.n; ++c) {
    M.at(0, c) = C(r0[c - 1]);
    M.at(1, c) = C(r1[c - 1]);
  }
  return M;
}

// Oracle: expand each 2x2 determinant by hand (ad - bc with columns in
// increasing order) and take log_abs, independently of trop_pluecker.
std::map<Pair, ExtRat> determinant_oracle(const PluckerMatrix& M) {
  std::map<Pair, ExtRat> out;
  for (const Pair& kl : all_pairs(M.n)) {
    ValuedCoeff det =
        M.at(0, kl.a) * M.at(1, kl.b) - M.at(0, kl.b) * M.at(1, kl.a);
    out[kl] = det.log_abs();
  }
  return out;
}

TropPoint point_from(int n, const std::map<Pair, ExtRat>& entries) {
  return TropPoint(n, entries);
}

TropPoint flat_point(int n, const std::set<Pair>& J) {
  std::map<Pair, ExtRat> e;
  for (const Pair& p : all_pairs(n))
    e[p] = J.count(p) ? ExtRat::neg_inf() : ExtRat{Rat(0)};
  return TropPoint(n, e);
}

// Quartet-tree metric on 4 leaves with the given cherry pairing, internal
// weight w, zero leaf weights.
TropPoint quartet_metric(const Pair& cherry, const Rat& w) {
  std::map<Pair, ExtRat> e;
  for (const Pair& p : all_pairs(4)) {
    bool within =
        p == cherry || (!cherry.contains(p.a) && !cherry.contains(p.b));
    e[p] = ExtRat{within ? Rat(0) : w};
  }
  return TropPoint(4, e);
}

}  // namespace

TEST_CASE("tropical pluecker vector against determinant oracle") {
  PluckerMatrix M = matrix_from({"1", "0", "1", "1"}, {"0", "1", "1", "t"});
  TropPoint x = trop_pluecker(M);
  auto oracle = determinant_oracle(M);
  for (const Pair& p : all_pairs(4)) CHECK(x.at(p) == oracle.at(p));
  CHECK(x.at(Pair(1, 2)) == ExtRat{Rat(0)});
  CHECK(x.at(Pair(1, 3)) == ExtRat{Rat(0)});
  CHECK(x.at(Pair(1, 4)) == ExtRat{Rat(-1)});
  CHECK(x.at(Pair(2, 3)) == ExtRat{Rat(0)});
  CHECK(x.at(Pair(2, 4)) == ExtRat{Rat(0)});
  CHECK(x.at(Pair(3, 4)) == ExtRat{Rat(0)});  // det = t - 1, order 0

  PluckerMatrix id2 = matrix_from({"1", "0"}, {"0", "1"});
  TropPoint x2 = trop_pluecker(id2);
  CHECK(x2.at(Pair(1, 2)) == ExtRat{Rat(0)});

  PluckerMatrix prop = matrix_from({"1", "1", "0", "0"}, {"0", "0", "1", "1"});
  TropPoint x3 = trop_pluecker(prop);
  CHECK(x3.at(Pair(1, 2)) == ExtRat::neg_inf());
  CHECK(x3.at(Pair(3, 4)) == ExtRat::neg_inf());
  for (const Pair& p : {Pair(1, 3), Pair(1, 4), Pair(2, 3), Pair(2, 4)})
    CHECK(x3.at(p) == ExtRat{Rat(0)});
  CHECK(vanishing_set(x3) == std::set<Pair>{Pair(1, 2), Pair(3, 4)});
  CHECK(x3.anchor() == Pair(1, 3));

  PluckerMatrix zero = matrix_from({"0", "0"}, {"0", "0"});
  CHECK_THROWS_AS(trop_pluecker(zero), RankDeficient);
}

TEST_CASE("trop point normalization and equality") {
  std::map<Pair, ExtRat> a, b;
  for (const Pair& p : all_pairs(4)) {
    Rat v(p.a + p.b);
    a[p] = ExtRat{v};
    b[p] = ExtRat{v + Rat(7, 2)};  // same point shifted by c*1
  }
  CHECK(point_from(4, a) == point_from(4, b));
  b[Pair(3, 4)] = ExtRat::neg_inf();
  CHECK(point_from(4, a) != point_from(4, b));

  TropPoint x = point_from(4, a);
  CHECK(x.anchor() == Pair(1, 2));
  CHECK(x.at(Pair(1, 2)) == ExtRat{Rat(0)});
  CHECK(x.rel(Pair(3, 4), Pair(1, 2)) == ExtRat{Rat(4)});
}

TEST_CASE("quartet classification") {
  TropPoint interior = quartet_metric(Pair(1, 2), Rat(1));
  QuartetClass q = quartet_classify(interior, {1, 2, 3, 4});
  CHECK(q.kind == QuartetClass::cherry);
  CHECK(((q.group1 == Pair(1, 2) && q.group2 == Pair(3, 4)) ||
         (q.group1 == Pair(3, 4) && q.group2 == Pair(1, 2))));

  TropPoint zero = flat_point(4, {});
  CHECK(quartet_classify(zero, {1, 2, 3, 4}).kind == QuartetClass::star);

  std::map<Pair, ExtRat> e;
  for (const Pair& p : all_pairs(4)) e[p] = ExtRat{Rat(0)};
  e[Pair(1, 2)] = ExtRat{Rat(5)};
  TropPoint bad = point_from(4, e);
  CHECK(quartet_classify(bad, {1, 2, 3, 4}).kind == QuartetClass::violation);

  // Classification is invariant under input ordering of the quartet.
  CHECK(quartet_classify(interior, {4, 2, 1, 3}).kind == QuartetClass::cherry);
}

TEST_CASE("point validation") {
  CHECK(validate_point(flat_point(4, {})).ok);
  CHECK(validate_point(quartet_metric(Pair(1, 3), Rat(2))).ok);

  std::map<Pair, ExtRat> e;
  for (const Pair& p : all_pairs(4)) e[p] = ExtRat{Rat(0)};
  e[Pair(1, 2)] = ExtRat{Rat(5)};
  Verdict v = validate_point(point_from(4, e));
  CHECK(!v.ok);
  CHECK(v.witness == std::array<int, 4>{1, 2, 3, 4});

  PluckerMatrix M = matrix_from({"1", "0", "1", "1", "t"},
                                {"0", "1", "1 + t", "t^(2)", "1"});
  CHECK(validate_point(trop_pluecker(M)).ok);
}

TEST_CASE("saturation conditions") {
  Pair ij(1, 2);
  CHECK(is_saturated({Pair(1, 3), Pair(1, 4), Pair(2, 3), Pair(3, 4)}, ij, 4));
  CHECK(is_saturated({}, ij, 4));
  CHECK(!is_saturated({Pair(1, 3), Pair(3, 4)}, ij, 4));
  // Shared index equal to an anchor leaf: the escape clause is unavailable.
  CHECK(!is_saturated({Pair(1, 3), Pair(1, 4)}, ij, 4));
  CHECK(is_saturated({Pair(1, 3), Pair(1, 4), Pair(3, 4)}, ij, 4));
  CHECK(is_saturated({Pair(3, 4)}, ij, 4));
  CHECK(is_saturated({Pair(1, 4), Pair(2, 4), Pair(3, 4)}, ij, 4));

  // Independent cross-check: a vanishing pattern is saturated exactly when
  // the 0/-inf point with that support passes the four-point screen.
  for (int n : {4, 5}) {
    auto pairs = all_pairs(n);
    std::vector<Pair> rest;
    for (const Pair& p : pairs)
      if (p != ij) rest.push_back(p);
    for (unsigned mask = 0; mask + 1 < (1u << rest.size()); ++mask) {
      std::set<Pair> J;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (mask & (1u << k)) J.insert(rest[k]);
      CHECK(is_saturated(J, ij, n) == validate_point(flat_point(n, J)).ok);
    }
  }
}

TEST_CASE("stratum realization") {
  Pair ij(1, 2);

  PluckerMatrix gen = realize_stratum({}, ij, 4);
  CHECK(vanishing_set(trop_pluecker(gen)).empty());

  PluckerMatrix prop = realize_stratum({Pair(3, 4)}, ij, 4);
  CHECK(vanishing_set(trop_pluecker(prop)) == std::set<Pair>{Pair(3, 4)});
  CHECK(prop.at(0, 3) == prop.at(0, 4));
  CHECK(prop.at(1, 3) == prop.at(1, 4));

  std::set<Pair> z4 = {Pair(1, 4), Pair(2, 4), Pair(3, 4)};
  PluckerMatrix zc = realize_stratum(z4, ij, 4);
  CHECK(zc.at(0, 4).is_zero());
  CHECK(zc.at(1, 4).is_zero());
  CHECK(vanishing_set(trop_pluecker(zc)) == z4);

  CHECK_THROWS_AS(realize_stratum({Pair(1, 3), Pair(3, 4)}, ij, 4), NotSaturated);

  // Section property of realize_stratum over all saturated sets, n = 4, 5.
  for (int n : {4, 5}) {
    auto pairs = all_pairs(n);
    std::vector<Pair> rest;
    for (const Pair& p : pairs)
      if (p != ij) rest.push_back(p);
    for (unsigned mask = 0; mask + 1 < (1u << rest.size()); ++mask) {
      std::set<Pair> J;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (mask & (1u << k)) J.insert(rest[k]);
      if (!is_saturated(J, ij, n)) continue;
      TropPoint x = trop_pluecker(realize_stratum(J, ij, n));
      CHECK(vanishing_set(x) == J);
      CHECK(validate_point(x).ok);
      CHECK(is_saturated(vanishing_set(x), x.anchor(), n));
    }
  }
}

TEST_CASE("three term relations") {
  auto r4 = three_term_relations(4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].quartet == std::array<int, 4>{1, 2, 3, 4});
  CHECK(r4[0].monomials[0] == std::array<Pair, 2>{Pair(1, 2), Pair(3, 4)});
  CHECK(r4[0].monomials[1] == std::array<Pair, 2>{Pair(1, 3), Pair(2, 4)});
  CHECK(r4[0].monomials[2] == std::array<Pair, 2>{Pair(1, 4), Pair(2, 3)});
  CHECK(r4[0].signs == std::array<int, 3>{1, -1, 1});
  CHECK(three_term_relations(5).size() == 5);
  CHECK(three_term_relations(6).size() == 15);

  // Exactness on a generic matrix: the signed sum of minor products vanishes.
  PluckerMatrix M = matrix_from({"1", "1", "1", "1", "1"},
                                {"1", "t", "1 + t", "t^(2)", "2"});
  for (const auto& rel : three_term_relations(5)) {
    ValuedCoeff sum;
    for (int m = 0; m < 3; ++m) {
      ValuedCoeff prod = M.minor(rel.monomials[m][0]) * M.minor(rel.monomials[m][1]);
      sum += rel.signs[m] > 0 ? prod : -prod;
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("metric json codec") {
  std::string text = R"({"n": 4, "entries": {
    "1,2": "0", "1,3": "1", "1,4": "1",
    "2,3": "1", "2,4": "1", "3,4": "-inf"}})";
  TropPoint x = parse_metric_json(text);
  CHECK(x.n() == 4);
  CHECK(x.at(Pair(3, 4)) == ExtRat::neg_inf());
  CHECK(x.at(Pair(1, 3)) == ExtRat{Rat(1)});

  TropPoint back = parse_metric_json(metric_to_json(x));
  CHECK(back == x);

  // Missing entry, bad key, malformed JSON, bad value.
  CHECK_THROWS_AS(parse_metric_json(R"({"n": 4, "entries": {"1,2": "0"}})"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_metric_json(
          R"({"n": 3, "entries": {"2,1": "0", "1,3": "0", "2,3": "0"}})"),
      SyntaxError);
  CHECK_THROWS_AS(parse_metric_json("{"), SyntaxError);
  CHECK_THROWS_AS(
      parse_metric_json(
          R"({"n": 3, "entries": {"1,2": "x", "1,3": "0", "2,3": "0"}})"),
      SyntaxError);

  // All -inf is not a projective point.
  CHECK_THROWS_AS(
      parse_metric_json(
          R"({"n": 3, "entries": {"1,2": "-inf", "1,3": "-inf", "2,3": "-inf"}})"),
      IncompatibleInputs);
}
