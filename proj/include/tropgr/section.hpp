#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/laurent.hpp"
#include "tropgr/tree.hpp"
#include "tropgr/trop_point.hpp"

namespace tropgr {

// Partial order on the leaves other than i,j: one totally ordered chain per
// subtree hanging off the i-j path, leaves of different chains incomparable.
// Chains are listed in increasing order of their smallest leaf.
struct CherryOrder {
  Pair ij{1, 2};
  std::vector<std::vector<int>> chains;

  int chain_of(int leaf) const;     // index into chains, -1 if absent
  int pos_in_chain(int leaf) const; // position within its chain, -1 if absent
  bool less(int a, int b) const;    // strict: same chain and a before b
  bool leq(int a, int b) const { return a == b ? chain_of(a) >= 0 : less(a, b); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  // All strict relations (a,b) with a before b, for golden comparisons.
  std::set<std::pair<int, int>> strict_pairs() const;
};

// Deterministic order construction: chains are the components off the i-j
// path; within a component, leaves closer to the path come first and the two
// leaves of the deepest cherry come last.
CherryOrder cherry_order(const Topology& T, const Pair& ij);

// Checks the three defining conditions of the order against the shape:
// chains partition the components off the i-j path, each chain is total, and
// for a < b < c in a chain the quartet {i,a,b,c} has {a,b} or {b,c} at a
// common node.
bool verify_cherry_property(const CherryOrder& order, const Topology& T);

// Transcendence-basis index set: 2(n-2) pairs, not containing ij.
struct IndexSet {
  Pair ij{1, 2};
  std::set<Pair> pairs;

  bool contains(const Pair& p) const { return pairs.count(p) > 0; }
  // H: the members that share exactly one index with ij.
  std::set<Pair> meeting_part() const;
};

// Per-leaf membership conditions relating I to the order and the vanishing
// set; also checks that the per-leaf contributions tile I exactly.
bool verify_compatible(const CherryOrder& order, const std::set<Pair>& J,
                       const IndexSet& I);

enum class SidePreference { KeepIRow, KeepJRow };

// Recursive construction along each chain: the first leaf of a chain (and any
// leaf all of whose predecessors have a vanishing row entry) contributes both
// row pairs; otherwise it contributes the chain pair to the deepest usable
// predecessor plus its preferred row pair. Throws IncompatibleInputs when the
// result fails verify_compatible.
IndexSet compatible_index_set(const Pair& ij, const Topology& T,
                              const std::set<Pair>& J,
                              const CherryOrder& order);
IndexSet compatible_index_set_pref(const Pair& ij, const Topology& T,
                                   const std::set<Pair>& J,
                                   const CherryOrder& order,
                                   SidePreference pref);

// Expansion of every coordinate through the basis I: identity on I, solved
// row entries for the pairs meeting ij outside I, quadratic combinations for
// everything else. Entries are exact Laurent polynomials in the I-variables.
class RewriteTable {
 public:
  RewriteTable(const Pair& ij, const CherryOrder& order,
               const std::set<Pair>& J, const IndexSet& I);

  const Pair& anchor() const { return ij_; }
  const std::set<Pair>& basis() const { return I_.pairs; }
  const IndexSet& index_set() const { return I_; }
  bool is_basis_var(const Pair& kl) const { return I_.contains(kl); }
  // Solved entries for the pairs meeting ij that are outside I.
  const std::map<Pair, LaurentPoly>& rewrites() const { return rr_; }
  // Expansion of u_kl for any kl != ij.
  const LaurentPoly& expand(const Pair& kl) const;

  // Rewrites f into the I-variables. Negative exponents on non-basis
  // variables are cleared first: returns (g, d) with f = g / u^d, all d >= 0.
  std::pair<LaurentPoly, ExpVec> rewrite_cleared(const LaurentPoly& f) const;
  // Same, but requires that no clearing is needed.
  LaurentPoly substitute(const LaurentPoly& f) const;

 private:
  Pair ij_;
  IndexSet I_;
  std::map<Pair, LaurentPoly> rr_;    // pairs meeting ij, outside I
  std::map<Pair, LaurentPoly> memo_;  // every pair != ij
};

// Builds the table and verifies triangularity (each solved entry only uses
// variables whose free members precede its leaf) and exactness (substituting
// the table into every three-term relation yields zero).
RewriteTable build_rewrite(const Pair& ij, const Topology& T,
                           const std::set<Pair>& J, const CherryOrder& order,
                           const IndexSet& I);

// Multiplicative seminorm on the coordinate ring fraction determined by x and
// the choices (T, J, order, I): log-scale evaluation by rewriting into the
// basis and taking the maximum over surviving monomials. Immutable after
// construction; safe for concurrent evaluation.
class Seminorm {
 public:
  Seminorm(TropPoint x, Pair ij, Topology T, std::set<Pair> J,
           CherryOrder order, IndexSet I, RewriteTable table);

  // log of the evaluation at f. Throws LocalizationViolation if f carries a
  // negative exponent on a coordinate with value -inf.
  ExtRat eval(const LaurentPoly& f) const;
  // x_kl - x_ij, defined for every pair.
  ExtRat coordinate(const Pair& kl) const;

  const TropPoint& point() const { return x_; }
  const Pair& anchor() const { return ij_; }
  const Topology& topology() const { return T_; }
  const std::set<Pair>& vanishing() const { return J_; }
  const CherryOrder& order() const { return order_; }
  const IndexSet& index_set() const { return I_; }
  const RewriteTable& table() const { return table_; }

 private:
  TropPoint x_;
  Pair ij_;
  Topology T_;
  std::set<Pair> J_;
  CherryOrder order_;
  IndexSet I_;
  RewriteTable table_;
};

struct SectionReport {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

// Checks log eval(u_kl) == x_kl - x_ij for every kl != ij (which subsumes
// vanishing on the coordinates in J); reports the first mismatch.
SectionReport verify_section(const Seminorm& s);

// Full construction at the canonical anchor (lexicographically least finite
// pair): infer the type, build the order, the index set and the table, and
// verify the section property. Throws CertificateFailure if no admissible
// shape produces a verified seminorm. Pre: validate_point(x) holds.
Seminorm section_point(const TropPoint& x);
// Same with a caller-chosen anchor; x_ij must be finite.
Seminorm section_point_at(const TropPoint& x, const Pair& ij);

// Diagnostic construction that forces I to be all pairs meeting ij, skipping
// the compatibility check; generally *not* a section (negative control).
Seminorm naive_skeleton(const TropPoint& x);

// The quartet relation on {a,b,c,d} written in the coordinates relative to
// the anchor (the anchor variable, if it occurs, is set to 1).
LaurentPoly three_term_u(const std::array<int, 4>& quartet, const Pair& anchor);

// Anchor change on monomials: a from-anchored coordinate v_kl equals
// u_kl / u_from in the to-anchored world.
LaurentPoly reanchor(const LaurentPoly& f, const Pair& from, const Pair& to);

// Deterministic test battery in the coordinates anchored at `anchor`: every
// coordinate, every quadratic coordinate expansion, every three-term
// relation, and 20 seeded random quadratics.
std::vector<LaurentPoly> test_battery(int n, const Pair& anchor,
                                      std::uint64_t seed);

// Seminorms at both anchors agree on the battery mapped through reanchor.
// Pre: x_ij and x_pq finite.
bool verify_gluing(const TropPoint& x, const Pair& ij, const Pair& pq);

// Two seminorms with the same anchor agree on the battery.
bool verify_same_values(const Seminorm& a, const Seminorm& b,
                        std::uint64_t seed);

struct FiberReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Draws a random 2 x n matrix with monomial entries, compares the exact
// evaluation seminorm of the matrix against the constructed seminorm at its
// tropicalization: evaluation <= section on every sampled function, with
// equality on monomials. Throws BoundExceeded outside 4 <= n <= 8.
FiberReport sample_fiber_and_check_max(int n, std::uint64_t seed,
                                       int poly_count);

}  // namespace tropgr
