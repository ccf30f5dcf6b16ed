#pragma once

#include <string>

#include "tropgr/tree.hpp"

namespace tropgr {

// Parses a single Newick tree. Leaf labels must be the integers 1..n, each
// exactly once; edge lengths are rationals ("3/2"), integers, or decimal
// literals converted exactly ("0.25" -> 1/4), and default to zero when
// absent. Internal vertices of degree 2 are rejected with InvalidTree
// unless suppress_degree_two is set, in which case they are contracted and
// the two incident edge weights added. Malformed text raises SyntaxError
// with a byte offset.
PhyloTree newick_parse(const std::string& text, bool suppress_degree_two = false);

// Prints rooted at the neighbor of leaf 1, children ordered by smallest
// descendant leaf, every edge carrying an explicit ":length". Requires
// n >= 3; parse(print(t)) reproduces t exactly.
std::string newick_print(const PhyloTree& t);

}  // namespace tropgr
