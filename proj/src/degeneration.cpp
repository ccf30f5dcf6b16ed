#include "tropgr/degeneration.hpp"

#include <string>
#include <utility>

#include "tropgr/errors.hpp"
#include "tropgr/poly_text.hpp"

namespace tropgr {

namespace {

std::string var_name(const Pair& kl) {
  return "u_" + std::to_string(kl.a) + "_" + std::to_string(kl.b);
}

}  // namespace

void ResiduePoly::add_term(const ExpVec& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPoly lift(const ResiduePoly& f) {
  LaurentPoly g;
  for (const auto& [e, c] : f.terms) g.add_term(e, ValuedCoeff(c));
  return g;
}

std::string print_residue(const ResiduePoly& f) { return print_poly(lift(f)); }

std::map<Pair, ExtRat> relative_coordinates(const TropPoint& x, const Pair& ij) {
  std::map<Pair, ExtRat> y;
  for (const auto& [kl, v] : x.entries()) y.emplace(kl, x.rel(kl, ij));
  return y;
}

TropEval trop_eval(const LaurentPoly& f, const std::map<Pair, ExtRat>& y) {
  if (f.is_zero())
    throw IncompatibleInputs("tropical evaluation of the zero polynomial");
  TropEval out{ExtRat::neg_inf(), {}};
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    ExtRat v = c.log_abs();
    for (const auto& [kl, a] : e) {
      auto it = y.find(kl);
      if (it == y.end())
        throw IncompatibleInputs("no coordinate for " + var_name(kl));
      v += it->second.times(a);
    }
    if (first || out.value < v) {
      out.value = v;
      out.argmax.clear();
      out.argmax.insert(e);
      first = false;
    } else if (v == out.value) {
      out.argmax.insert(e);
    }
  }
  return out;
}

ResiduePoly initial_form(const LaurentPoly& f, const std::map<Pair, ExtRat>& y) {
  TropEval te = trop_eval(f, y);
  ResiduePoly out;
  for (const ExpVec& e : te.argmax)
    out.add_term(e, f.terms().at(e).residue_leading());
  return out;
}

namespace {

// Shared engine: walks the pairs eliminated by the basis, evaluates each
// expansion tropically, and collects the initial forms. A weight mismatch
// flips the verdict to unit_ideal; structural defects are internal errors.
MultiplicityCertificate certify(const TropPoint& x, const Pair& ij,
                                const RewriteTable& table,
                                const std::set<Pair>& J) {
  const std::map<Pair, ExtRat> y = relative_coordinates(x, ij);
  std::set<Pair> free;
  for (const Pair& kl : table.basis())
    if (!J.count(kl)) free.insert(kl);
  MultiplicityCertificate cert{x,  ij, J, table.basis(), {},
                               DegenVerdict::multiplicity_one, 1};
  for (const Pair& kl : all_pairs(x.n())) {
    if (kl == ij || J.count(kl) || table.is_basis_var(kl)) continue;
    const LaurentPoly& f = table.expand(kl);
    if (f.is_zero())
      throw CertificateFailure("expansion of " + var_name(kl) + " vanished");
    TropEval te = trop_eval(f, y);
    if (te.value != x.rel(kl, ij)) {
      cert.verdict = DegenVerdict::unit_ideal;
      cert.multiplicity = 0;
      continue;
    }
    ResiduePoly form;
    for (const ExpVec& e : te.argmax)
      form.add_term(e, f.terms().at(e).residue_leading());
    if (form.is_zero())
      throw CertificateFailure("initial form of " + var_name(kl) + " is zero");
    for (const auto& [e, c] : form.terms)
      for (const auto& [var, a] : e)
        if (!free.count(var))
          throw CertificateFailure("initial form of " + var_name(kl) +
                                   " touches the non-basis variable " +
                                   var_name(var));
    cert.forms.emplace(kl, std::move(form));
  }
  return cert;
}

std::vector<ResiduePoly> gens_from(const MultiplicityCertificate& cert) {
  std::vector<ResiduePoly> out;
  for (const auto& [kl, form] : cert.forms) {
    ResiduePoly g;
    g.add_term({{kl, 1}}, Rat(1));
    for (const auto& [e, c] : form.terms) g.add_term(e, -c);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

MultiplicityCertificate multiplicity_certificate(const TropPoint& x) {
  Seminorm s = section_point(x);
  return certify(s.point(), s.anchor(), s.table(), s.vanishing());
}

MultiplicityCertificate certify_with(const TropPoint& x, const Pair& ij,
                                     const CherryOrder& order,
                                     const std::set<Pair>& J,
                                     const IndexSet& I) {
  if (!verify_compatible(order, J, I))
    throw IncompatibleInputs(
        "index set is not compatible with the order and the vanishing set");
  RewriteTable table(ij, order, J, I);
  return certify(x, ij, table, J);
}

std::vector<ResiduePoly> initial_ideal_gens(const TropPoint& x) {
  MultiplicityCertificate cert = multiplicity_certificate(x);
  if (cert.verdict != DegenVerdict::multiplicity_one)
    throw CertificateFailure("initial ideal degenerated to the unit ideal");
  return gens_from(cert);
}

namespace {

// Quartet metric with unit internal edge and zero leaf weights, -inf
// overrides on the vanishing set.
TropPoint quartet_rep(const Pair& c1, const Pair& c2, const std::set<Pair>& J) {
  std::map<Pair, ExtRat> e;
  for (const Pair& kl : all_pairs(4)) {
    if (J.count(kl)) {
      e.emplace(kl, ExtRat::neg_inf());
      continue;
    }
    e.emplace(kl, ExtRat(Rat(kl == c1 || kl == c2 ? 0 : 1)));
  }
  return TropPoint(4, e);
}

TropPoint star_rep(const std::set<Pair>& J) {
  std::map<Pair, ExtRat> e;
  for (const Pair& kl : all_pairs(4))
    e.emplace(kl, J.count(kl) ? ExtRat::neg_inf() : ExtRat(Rat(0)));
  return TropPoint(4, e);
}

std::string join_pairs(const std::set<Pair>& J) {
  std::string out;
  for (const Pair& kl : J) {
    if (!out.empty()) out += '.';
    out += std::to_string(kl.a);
    out += std::to_string(kl.b);
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> gr24_catalog() {
  const Pair ij{1, 2};
  const CherryOrder split{ij, {{3}, {4}}};  // 3 and 4 in separate branches
  const CherryOrder chain{ij, {{3, 4}}};    // 3 below 4 in one branch
  const IndexSet rows{ij, {Pair{1, 3}, Pair{2, 3}, Pair{1, 4}, Pair{2, 4}}};
  const IndexSet cherry{ij, {Pair{1, 3}, Pair{2, 3}, Pair{1, 4}, Pair{3, 4}}};

  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& name, const TropPoint& x,
                 const CherryOrder& order, const std::set<Pair>& J,
                 const IndexSet& I) {
    MultiplicityCertificate cert = certify_with(x, ij, order, J, I);
    if (cert.verdict != DegenVerdict::multiplicity_one)
      throw CertificateFailure("catalog case " + name + " failed its weight check");
    out.push_back(CatalogEntry{name, ij, J, I.pairs, x, gens_from(cert)});
  };

  // Interior of the three quartet cones and of the star cone. The 12|34
  // shape puts 3 and 4 into one chain and swaps u_24 out of the basis; the
  // star point reuses that chart, where the whole expansion survives.
  add("interior-14|23", quartet_rep(Pair{1, 4}, Pair{2, 3}, {}), split, {}, rows);
  add("interior-13|24", quartet_rep(Pair{1, 3}, Pair{2, 4}, {}), split, {}, rows);
  add("interior-12|34", quartet_rep(Pair{1, 2}, Pair{3, 4}, {}), chain, {}, cherry);
  add("star", star_rep({}), chain, {}, cherry);

  // Boundary strata seen from the caterpillar shapes: every nonempty
  // saturated vanishing set except {34}, with the four row entries as basis.
  // The six sets keeping the 3-4 distance finite use a collapsed quartet
  // representative; the rest sit over the all-zero finite part.
  add("backbone-13", quartet_rep(Pair{1, 3}, Pair{2, 4}, {Pair{1, 3}}), split,
      {Pair{1, 3}}, rows);
  add("backbone-14", quartet_rep(Pair{1, 4}, Pair{2, 3}, {Pair{1, 4}}), split,
      {Pair{1, 4}}, rows);
  add("backbone-23", quartet_rep(Pair{1, 4}, Pair{2, 3}, {Pair{2, 3}}), split,
      {Pair{2, 3}}, rows);
  add("backbone-24", quartet_rep(Pair{1, 3}, Pair{2, 4}, {Pair{2, 4}}), split,
      {Pair{2, 4}}, rows);
  add("backbone-13.24",
      quartet_rep(Pair{1, 3}, Pair{2, 4}, {Pair{1, 3}, Pair{2, 4}}), split,
      {Pair{1, 3}, Pair{2, 4}}, rows);
  add("backbone-14.23",
      quartet_rep(Pair{1, 4}, Pair{2, 3}, {Pair{1, 4}, Pair{2, 3}}), split,
      {Pair{1, 4}, Pair{2, 3}}, rows);
  const std::vector<std::set<Pair>> collapsed{
      {Pair{1, 3}, Pair{1, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{2, 3}, Pair{3, 4}},
      {Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 4}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 3}, Pair{3, 4}},
      {Pair{1, 3}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 4}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}}};
  for (const std::set<Pair>& J : collapsed)
    add("backbone-" + join_pairs(J), star_rep(J), split, J, rows);

  // Boundary strata seen from the 12|34 chain chart. With both 3-row
  // entries alive there are exactly two saturated sets; with a vanishing
  // 3-row entry the four row entries become compatible with the chain and
  // nothing is left to eliminate.
  add("cherry-J1", quartet_rep(Pair{1, 2}, Pair{3, 4}, {Pair{3, 4}}), chain,
      {Pair{3, 4}}, cherry);
  add("cherry-J2", star_rep({Pair{1, 4}, Pair{2, 4}, Pair{3, 4}}), chain,
      {Pair{1, 4}, Pair{2, 4}, Pair{3, 4}}, cherry);
  const std::vector<std::set<Pair>> pinched{
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 3}, Pair{3, 4}},
      {Pair{1, 3}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{2, 4}, Pair{3, 4}},
      {Pair{2, 3}, Pair{2, 4}, Pair{3, 4}},
      {Pair{1, 3}, Pair{1, 4}, Pair{3, 4}},
      {Pair{1, 4}, Pair{2, 3}, Pair{2, 4}, Pair{3, 4}}};
  for (std::size_t k = 0; k < pinched.size(); ++k)
    add("cherry13or23-J" + std::to_string(k + 1), star_rep(pinched[k]), chain,
        pinched[k], rows);

  return out;
}

}  // namespace tropgr
