#include "tropgr/plucker.hpp"

#include <algorithm>
#include <numeric>

#include "tropgr/errors.hpp"

namespace tropgr {

TropPoint trop_pluecker(const PluckerMatrix& M) {
  std::map<Pair, ExtRat> entries;
  bool any = false;
  for (const Pair& kl : all_pairs(M.n)) {
    ValuedCoeff det = M.minor(kl);
    any = any || !det.is_zero();
    entries[kl] = det.log_abs();
  }
  if (!any) throw RankDeficient("all Pluecker minors vanish");
  return TropPoint(M.n, entries);
}

QuartetClass quartet_classify(const TropPoint& x, std::array<int, 4> quartet) {
  std::sort(quartet.begin(), quartet.end());
  int a = quartet[0], b = quartet[1], c = quartet[2], d = quartet[3];
  std::array<std::array<Pair, 2>, 3> groups = {{{Pair(a, b), Pair(c, d)},
                                                {Pair(a, c), Pair(b, d)},
                                                {Pair(a, d), Pair(b, c)}}};
  std::array<ExtRat, 3> s;
  for (int m = 0; m < 3; ++m) s[m] = x.at(groups[m][0]) + x.at(groups[m][1]);

  ExtRat top = max(max(s[0], s[1]), s[2]);
  int at_top = 0;
  for (int m = 0; m < 3; ++m) at_top += (s[m] == top);

  QuartetClass out;
  if (at_top == 1) {
    out.kind = QuartetClass::violation;
  } else if (at_top == 3) {
    out.kind = QuartetClass::star;
  } else {
    out.kind = QuartetClass::cherry;
    for (int m = 0; m < 3; ++m) {
      if (s[m] != top) {
        out.group1 = groups[m][0];
        out.group2 = groups[m][1];
      }
    }
  }
  return out;
}

Verdict validate_point(const TropPoint& x) {
  int n = x.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (quartet_classify(x, {a, b, c, d}).kind == QuartetClass::violation)
            return Verdict{false, {a, b, c, d}};
  return Verdict{};
}

bool is_saturated(const std::set<Pair>& J, const Pair& ij, int n) {
  if (J.count(ij)) throw IncompatibleInputs("anchor pair inside vanishing set");
  int i = ij.a, j = ij.b;
  // (ii) both anchor rows vanish at k: the whole column k vanishes.
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    if (J.count(Pair(i, k)) && J.count(Pair(j, k))) {
      for (int l = 1; l <= n; ++l)
        if (l != k && !J.count(Pair(k, l))) return false;
    }
  }
  // (i) chains kl, ls force ks unless column l vanishes entirely.
  for (int k = 1; k <= n; ++k) {
    for (int s = k + 1; s <= n; ++s) {
      if (Pair(k, s) == ij || J.count(Pair(k, s))) continue;
      for (int l = 1; l <= n; ++l) {
        if (l == k || l == s) continue;
        if (!J.count(Pair(k, l)) || !J.count(Pair(l, s))) continue;
        bool column_l_vanishes =
            l != i && l != j && J.count(Pair(i, l)) && J.count(Pair(j, l));
        if (!column_l_vanishes) return false;
      }
    }
  }
  return true;
}

PluckerMatrix realize_stratum(const std::set<Pair>& J, const Pair& ij, int n) {
  if (!is_saturated(J, ij, n))
    throw NotSaturated("vanishing set fails the saturation conditions");

  std::vector<bool> zero_col(n + 1, false);
  for (int l = 1; l <= n; ++l) {
    if (l == ij.a || l == ij.b) continue;
    zero_col[l] = J.count(Pair(ij.a, l)) && J.count(Pair(ij.b, l));
  }

  // Classes of k ~ l iff kl in J, over the nonzero columns.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Pair& p : J)
    if (!zero_col[p.a] && !zero_col[p.b]) parent[find(p.a)] = find(p.b);
  if (find(ij.a) == find(ij.b))
    throw NotSaturated("anchor columns forced parallel");

  // Directions: anchor classes get the unit vectors, the rest 1 x_k with
  // pairwise distinct rational slopes.
  std::map<int, std::pair<Rat, Rat>> direction;
  direction[find(ij.a)] = {Rat(1), Rat(0)};
  direction[find(ij.b)] = {Rat(0), Rat(1)};
  int next = 3;
  for (int l = 1; l <= n; ++l) {
    if (zero_col[l]) continue;
    int r = find(l);
    if (!direction.count(r)) {
      direction[r] = {Rat(1), Rat(next - 2)};
      ++next;
    }
  }

  PluckerMatrix M(n);
  for (int l = 1; l <= n; ++l) {
    if (zero_col[l]) continue;
    auto [u, v] = direction.at(find(l));
    M.at(0, l) = ValuedCoeff(u);
    M.at(1, l) = ValuedCoeff(v);
  }
  if (vanishing_set(trop_pluecker(M)) != J)
    throw NotSaturated("vanishing pattern is not realizable");
  return M;
}

std::vector<ThreeTerm> three_term_relations(int n) {
  std::vector<ThreeTerm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          ThreeTerm rel;
          rel.quartet = {i, j, k, l};
          rel.monomials = {{{Pair(i, j), Pair(k, l)},
                            {Pair(i, k), Pair(j, l)},
                            {Pair(i, l), Pair(j, k)}}};
          rel.signs = {1, -1, 1};
          out.push_back(rel);
        }
  return out;
}

}  // namespace tropgr
