#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/laurent.hpp"
#include "tropgr/pairs.hpp"
#include "tropgr/rational.hpp"
#include "tropgr/section.hpp"
#include "tropgr/trop_point.hpp"

namespace tropgr {

// Integer lineality generators over the pair coordinates: generator k is 1 on
// every pair containing leaf k and 0 elsewhere. Their sum is twice the
// all-ones vector, the only relation, so the span has rank n and rank n-1
// modulo the all-ones line.
struct CutLattice {
  int n = 0;
  std::vector<std::map<Pair, int>> gens;  // gens[k-1] belongs to leaf k

  // Leaf index 1..n; throws IncompatibleInputs outside that range.
  const std::map<Pair, int>& generator(int k) const;
};

// Throws IncompatibleInputs for n < 3.
CutLattice cut_metrics(int n);

// Representative of x modulo the cut-metric span: x minus the unique
// combination solving the normal equations exactly (the Gram matrix is
// (n-2) Id + all-ones, invertible for n >= 3), hence orthogonal to every
// generator. Idempotent and constant on cosets of the span. Throws
// IncompatibleInputs on an infinite entry.
std::map<Pair, Rat> project_mod_lineality(const TropPoint& x);

// 1-skeleton of the quotient fan: a vertex per 2-subset {a,b} (the split
// separating a,b from everything else), an edge when two splits are realized
// by distinct internal edges of a common trivalent shape. For n = 4 the two
// 2-subset labels of a shape's only split name the same edge, so they are
// never adjacent.
struct SplitComplex {
  int n = 0;
  std::vector<Pair> vertices;             // ascending
  std::set<std::pair<Pair, Pair>> edges;  // stored with first < second

  bool adjacent(const Pair& a, const Pair& b) const;
  int degree(const Pair& v) const;
  bool regular() const;  // all vertex degrees equal
  int girth() const;     // shortest cycle length, 0 when there is no cycle
  // n == 5 together with the expected facts there: 10 vertices, 15 edges,
  // 3-regular, girth 5, and adjacency equal to disjointness of the 2-subsets.
  bool petersen() const;
};

// Scans every shape from enumerate_trivalent(n). Throws BoundExceeded
// outside 4 <= n <= 7.
SplitComplex split_complex(int n);

// {"vertices": [...], "edges": [...], "checks": {regular, girth, petersen}}
// with deterministic ordering.
std::string split_complex_json(const SplitComplex& g);

// Exponent vectors generating the torus-invariant subring in the chart at
// ij: u_ij u_kl / (u_ik u_jl) and u_ij u_kl / (u_il u_jk), one pair per
// 2-subset {k,l} avoiding ij, in ascending order of {k,l}. The u_ij factor
// makes every vector pair to zero against every cut generator; evaluation is
// unaffected because the anchor coordinate is exactly 1 in its chart.
// Throws IncompatibleInputs for n < 4 or an anchor outside the leaf set.
std::vector<ExpVec> invariant_monomials(const Pair& ij, int n);

// Both seminorms assign the same log value to every invariant generator at
// their common anchor. Throws IncompatibleInputs when anchors or leaf counts
// differ.
bool invariants_agree(const Seminorm& a, const Seminorm& b);

// Compares the seminorms at x and at x shifted by sum_k lambda[k-1] l_k on
// all invariant generators. Pre: x finite with validate_point(x) ok, one
// lambda entry per leaf; violations throw IncompatibleInputs.
bool verify_descent(const TropPoint& x, const std::vector<Rat>& lambda);

}  // namespace tropgr
