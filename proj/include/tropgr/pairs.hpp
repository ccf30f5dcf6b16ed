#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "tropgr/errors.hpp"

namespace tropgr {

// Unordered pair {i,j}, 1 <= i < j <= n, stored canonically with a < b.
struct Pair {
  int a = 0, b = 0;
  Pair() = default;
  Pair(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {
    if (i == j || i < 1 || j < 1) throw IncompatibleInputs("invalid pair indices");
  }
  bool contains(int k) const { return a == k || b == k; }
  int other(int k) const { return a == k ? b : a; }
  auto operator<=>(const Pair&) const = default;
  std::string to_string() const {
    return std::to_string(a) + "," + std::to_string(b);
  }
};

// Sign of the ordered occurrence (i,j) relative to canonical storage.
inline int pair_sign(int i, int j) { return i < j ? 1 : -1; }

inline std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// I(ij): the pairs sharing exactly one index with ij.
inline std::vector<Pair> pairs_meeting(const Pair& ij, int n) {
  std::vector<Pair> out;
  for (int l = 1; l <= n; ++l) {
    if (ij.contains(l)) continue;
    out.emplace_back(ij.a, l);
    out.emplace_back(ij.b, l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropgr
