#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/pairs.hpp"
#include "tropgr/rational.hpp"
#include "tropgr/trop_point.hpp"

namespace tropgr {

// Weighted leaf-labeled tree. Vertices are 0..vertex_count-1; vertex k-1 is
// the leaf labeled k for k in 1..n, every other vertex is internal.
struct PhyloTree {
  struct Edge {
    int u = 0;
    int v = 0;
    Rat w;
  };

  int n = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;

  bool is_leaf(int vertex) const { return vertex < n; }

  // Throws InvalidTree unless connected, acyclic, every leaf vertex has
  // degree 1, every internal vertex has degree >= 3, and internal edge
  // weights are >= 0. Leaf edge weights are unrestricted.
  void validate() const;

  // vertex -> list of (neighbor, edge index)
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  // Contracts internal edges of weight zero (leaf edges are never touched).
  PhyloTree contract_zero_internal() const;
};

// Path-weight sum for every leaf pair, without projective normalization.
std::map<Pair, Rat> path_sums(const PhyloTree& t);

// Leaf-labeled shape with a canonical text encoding: rooted at the neighbor
// of leaf 1, children listed in order of their smallest descendant leaf.
// Encodings are equal iff the shapes are isomorphic respecting labels.
class Topology {
 public:
  explicit Topology(const PhyloTree& t);

  int n() const { return n_; }
  const std::string& code() const { return code_; }
  bool trivalent() const { return trivalent_; }
  int internal_edge_count() const { return static_cast<int>(splits_.size()); }

  // Pairing this shape induces on a four-leaf subset: 0, 1, 2 index the
  // pairings {ab|cd, ac|bd, ad|bc} of the sorted quartet; -1 if no edge
  // separates the quartet.
  int quartet_pairing(std::array<int, 4> quartet) const;

  bool operator==(const Topology& o) const { return code_ == o.code_; }
  bool operator!=(const Topology& o) const { return code_ != o.code_; }
  bool operator<(const Topology& o) const { return code_ < o.code_; }

 private:
  int n_ = 0;
  bool trivalent_ = false;
  std::vector<unsigned> splits_;  // leaf set across each internal edge, side without leaf 1
  std::string code_;
};

TropPoint metric_from_tree(const PhyloTree& t);

// Exact reconstruction of the tree realizing a finite point that satisfies
// the four-point condition; zero-weight internal edges are contracted, so
// the result is the shape of the smallest cone containing the input.
// Throws NotTreeMetric on infinite entries or a four-point violation.
PhyloTree neighbor_joining(const TropPoint& x);

// All (2n-5)!! trivalent shapes on leaves 1..n, sorted by canonical code.
// Throws BoundExceeded outside 3 <= n <= 9.
std::vector<Topology> enumerate_trivalent(int n);

// Weak four-point constraints of T at x: for a quartet resolved as ab|cd,
// x_ab + x_cd must not exceed the larger of the other two sums, and those
// two must agree whenever both are finite (an infinite side imposes
// nothing); unresolved quartets need all three sums to agree in that sense.
bool cone_membership(const TropPoint& x, const Topology& T);

// Vanishing set together with the first trivalent shape, in canonical code
// order, whose closed cone contains x. Points interior to a maximal cone
// short-circuit through neighbor_joining; everything else scans the
// canonical enumeration. Throws NoConeFound if x fails the four-point test.
std::pair<Topology, std::set<Pair>> infer_type(const TropPoint& x);

}  // namespace tropgr
