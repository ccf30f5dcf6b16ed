#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropgr/laurent.hpp"
#include "tropgr/plucker.hpp"
#include "tropgr/section.hpp"

namespace tropgr {

// Laurent polynomial over the residue field, realized with exact rational
// coefficients. Zero coefficients are never stored; exponents are integers.
struct ResiduePoly {
  std::map<ExpVec, Rat> terms;

  void add_term(const ExpVec& e, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const ResiduePoly& o) const { return terms == o.terms; }
  bool operator!=(const ResiduePoly& o) const { return !(*this == o); }
};

// Lift into the coefficient field, e.g. to share the polynomial printer.
LaurentPoly lift(const ResiduePoly& f);
std::string print_residue(const ResiduePoly& f);

// Coordinates y_kl = x_kl - x_ij relative to a finite pair; y_ij = 0.
std::map<Pair, ExtRat> relative_coordinates(const TropPoint& x, const Pair& ij);

struct TropEval {
  ExtRat value;             // max over monomials of log|c| + <e, y>
  std::set<ExpVec> argmax;  // exponent vectors attaining the maximum
};

// Exact tropical evaluation. Every variable of f must have a coordinate in
// y, finite wherever f carries a negative exponent.
TropEval trop_eval(const LaurentPoly& f, const std::map<Pair, ExtRat>& y);

// Sum of the leading residue coefficients over the argmax monomials.
ResiduePoly initial_form(const LaurentPoly& f, const std::map<Pair, ExtRat>& y);

// Generators u_kl - in_y(f_kl) of the initial ideal, one per pair kl outside
// I, J and the anchor, written in the I \ J variables; the coordinate data
// (ij, T, J, order, I) is chosen exactly as in section_point and
// y_kl = x_kl - x_ij. Sorted by the eliminated pair. Pre: validate_point(x).
std::vector<ResiduePoly> initial_ideal_gens(const TropPoint& x);

enum class DegenVerdict { multiplicity_one, unit_ideal };

// Substitution data certifying that the initial degeneration is integral
// with tropical multiplicity one: every eliminated coordinate rewrites to a
// nonzero residue polynomial in the free I \ J variables.
struct MultiplicityCertificate {
  TropPoint x;
  Pair ij;
  std::set<Pair> J;
  std::set<Pair> I;
  std::map<Pair, ResiduePoly> forms;  // kl -> in_y(f_kl), support in I \ J
  DegenVerdict verdict = DegenVerdict::multiplicity_one;
  int multiplicity = 1;  // 1 when certified, 0 when the ideal is the unit ideal
};

// Pipeline certificate with the coordinate data as in section_point.
// Pre: validate_point(x). Throws CertificateFailure when an initial form is
// zero or touches a non-basis variable (internal consistency).
MultiplicityCertificate multiplicity_certificate(const TropPoint& x);

// Same check over caller-chosen coordinate data. A tropical weight mismatch
// (coordinates off the variety relative to their stratum) makes the initial
// ideal contain a unit and is reported as the unit_ideal verdict, not an
// error. Throws IncompatibleInputs when I is not compatible with (order, J).
MultiplicityCertificate certify_with(const TropPoint& x, const Pair& ij,
                                     const CherryOrder& order,
                                     const std::set<Pair>& J,
                                     const IndexSet& I);

struct CatalogEntry {
  std::string name;
  Pair ij;
  std::set<Pair> J;
  std::set<Pair> I;
  TropPoint x;
  std::vector<ResiduePoly> generators;
};

// Golden n = 4 table: one entry per case of the Gr(2,4) degeneration survey,
// with a representative rational point (internal edge weights 1, leaf
// weights 0, -inf inserted on the vanishing set), the curated coordinate
// data, and the computed initial-ideal generators.
std::vector<CatalogEntry> gr24_catalog();

}  // namespace tropgr
