#include "tropgr/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tropgr/errors.hpp"
#include "tropgr/plucker.hpp"

namespace tropgr {

void PhyloTree::validate() const {
  if (n < 2) throw InvalidTree("need at least two leaves");
  if (vertex_count < n) throw InvalidTree("vertex count below leaf count");
  if (edges.size() + 1 != static_cast<size_t>(vertex_count))
    throw InvalidTree("edge count does not match a tree");
  std::vector<int> degree(vertex_count, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count ||
        e.u == e.v)
      throw InvalidTree("edge endpoint out of range");
    ++degree[e.u];
    ++degree[e.v];
    if (e.u >= n && e.v >= n && e.w < Rat(0))
      throw InvalidTree("negative inner edge weight");
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (v < n && degree[v] != 1)
      throw InvalidTree("leaf vertex must have degree 1");
    if (v >= n && degree[v] < 3)
      throw InvalidTree("inner vertex of degree below 3");
  }
  // Reachability; together with |E| = |V| - 1 this also excludes cycles.
  auto adj = adjacency();
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, idx] : adj[v]) {
      (void)idx;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) throw InvalidTree("tree is not connected");
}

std::vector<std::vector<std::pair<int, int>>> PhyloTree::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);
  for (size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back({edges[i].v, static_cast<int>(i)});
    adj[edges[i].v].push_back({edges[i].u, static_cast<int>(i)});
  }
  return adj;
}

PhyloTree PhyloTree::contract_zero_internal() const {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges)
    if (e.u >= n && e.v >= n && e.w == Rat(0)) parent[find(e.u)] = find(e.v);

  // Leaves are never merged, so they keep their ids; surviving inner
  // classes are renumbered densely.
  std::vector<int> id(vertex_count, -1);
  for (int v = 0; v < n; ++v) id[v] = v;
  int next = n;
  for (int v = n; v < vertex_count; ++v) {
    int r = find(v);
    if (id[r] == -1) id[r] = next++;
  }
  PhyloTree out;
  out.n = n;
  out.vertex_count = next;
  for (const auto& e : edges) {
    if (e.u >= n && e.v >= n && e.w == Rat(0)) continue;
    out.edges.push_back({id[find(e.u)], id[find(e.v)], e.w});
  }
  return out;
}

std::map<Pair, Rat> path_sums(const PhyloTree& t) {
  auto adj = t.adjacency();
  std::map<Pair, Rat> out;
  for (int a = 0; a < t.n; ++a) {
    std::vector<Rat> dist(t.vertex_count);
    std::vector<char> seen(t.vertex_count, 0);
    std::vector<int> stack = {a};
    seen[a] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, idx] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          dist[w] = dist[v] + t.edges[idx].w;
          stack.push_back(w);
        }
    }
    for (int b = a + 1; b < t.n; ++b) out[Pair(a + 1, b + 1)] = dist[b];
  }
  return out;
}

Topology::Topology(const PhyloTree& t) {
  t.validate();
  if (t.n < 3) throw InvalidTree("a labeled shape needs at least three leaves");
  n_ = t.n;
  auto adj = t.adjacency();
  trivalent_ = true;
  for (int v = t.n; v < t.vertex_count; ++v)
    if (adj[v].size() != 3) trivalent_ = false;

  // Leaf masks of the side of each edge away from leaf 1.
  std::vector<int> par(t.vertex_count, -2);
  std::vector<int> order;
  par[0] = -1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, idx] : adj[v]) {
      (void)idx;
      if (par[w] == -2) {
        par[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<unsigned> mask(t.vertex_count, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.is_leaf(v)) mask[v] |= 1u << v;
    if (par[v] >= 0) mask[par[v]] |= mask[v];
  }
  for (const auto& e : t.edges)
    if (!t.is_leaf(e.u) && !t.is_leaf(e.v))
      splits_.push_back(mask[par[e.v] == e.u ? e.v : e.u]);
  std::sort(splits_.begin(), splits_.end());

  // Nested-parenthesis encoding from the neighbor of leaf 1 downward.
  std::function<std::pair<std::string, int>(int, int)> enc =
      [&](int v, int from) -> std::pair<std::string, int> {
    if (t.is_leaf(v)) return {std::to_string(v + 1), v + 1};
    std::vector<std::pair<int, std::string>> kids;
    for (auto [w, idx] : adj[v]) {
      (void)idx;
      if (w == from) continue;
      auto [text, mn] = enc(w, v);
      kids.push_back({mn, std::move(text)});
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ',';
      s += kids[i].second;
    }
    s += ')';
    return {std::move(s), kids.front().first};
  };
  code_ = enc(adj[0][0].first, 0).first;
}

int Topology::quartet_pairing(std::array<int, 4> q) const {
  std::sort(q.begin(), q.end());
  if (q[0] < 1 || q[3] > n_ || q[0] == q[1] || q[1] == q[2] || q[2] == q[3])
    throw IncompatibleInputs("quartet needs four distinct leaves in range");
  auto side = [](unsigned S, int leaf) { return (S >> (leaf - 1)) & 1u; };
  for (unsigned S : splits_) {
    unsigned a = side(S, q[0]), b = side(S, q[1]), c = side(S, q[2]),
             d = side(S, q[3]);
    if (a == b && c == d && a != c) return 0;
    if (a == c && b == d && a != b) return 1;
    if (a == d && b == c && a != b) return 2;
  }
  return -1;
}

TropPoint metric_from_tree(const PhyloTree& t) {
  t.validate();
  std::map<Pair, ExtRat> entries;
  for (const auto& [p, r] : path_sums(t)) entries[p] = ExtRat(r);
  return TropPoint(t.n, entries);
}

PhyloTree neighbor_joining(const TropPoint& x) {
  const int n = x.n();
  for (const Pair& p : all_pairs(n))
    if (!x.finite(p))
      throw NotTreeMetric("entry " + p.to_string() + " is not finite");
  Verdict verdict = validate_point(x);
  if (!verdict.ok) {
    const auto& w = verdict.witness;
    throw NotTreeMetric("four-point failure at {" + std::to_string(w[0]) + "," +
                        std::to_string(w[1]) + "," + std::to_string(w[2]) +
                        "," + std::to_string(w[3]) + "}");
  }

  auto key = [](int a, int b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::map<std::pair<int, int>, Rat> D;
  for (const Pair& p : all_pairs(n)) D[key(p.a - 1, p.b - 1)] = x.at(p).value();
  auto dist = [&](int a, int b) -> const Rat& { return D.at(key(a, b)); };

  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  int vertex_count = n;
  std::vector<PhyloTree::Edge> edges;

  while (active.size() > 3) {
    const long m = static_cast<long>(active.size());
    std::map<int, Rat> R;
    for (int a : active) {
      Rat sum;
      for (int b : active)
        if (b != a) sum += dist(a, b);
      R[a] = sum;
    }
    // Standard selection criterion; ties resolve to the smallest id pair.
    int ba = -1, bb = -1;
    Rat best;
    bool have = false;
    for (size_t i = 0; i < active.size(); ++i)
      for (size_t j = i + 1; j < active.size(); ++j) {
        int a = active[i], b = active[j];
        Rat q = Rat(m - 2) * dist(a, b) - R[a] - R[b];
        if (!have || q < best) {
          have = true;
          best = q;
          ba = a;
          bb = b;
        }
      }
    int u = vertex_count++;
    Rat d_ab = dist(ba, bb);
    Rat la = d_ab / Rat(2) + (R[ba] - R[bb]) / Rat(2 * (m - 2));
    Rat lb = d_ab - la;
    edges.push_back({ba, u, la});
    edges.push_back({bb, u, lb});
    for (int c : active) {
      if (c == ba || c == bb) continue;
      D[key(u, c)] = (dist(ba, c) + dist(bb, c) - d_ab) / Rat(2);
    }
    active.erase(std::remove(active.begin(), active.end(), ba), active.end());
    active.erase(std::remove(active.begin(), active.end(), bb), active.end());
    active.push_back(u);
  }
  if (active.size() == 3) {
    int a = active[0], b = active[1], c = active[2];
    int u = vertex_count++;
    edges.push_back({a, u, (dist(a, b) + dist(a, c) - dist(b, c)) / Rat(2)});
    edges.push_back({b, u, (dist(a, b) + dist(b, c) - dist(a, c)) / Rat(2)});
    edges.push_back({c, u, (dist(a, c) + dist(b, c) - dist(a, b)) / Rat(2)});
  } else if (active.size() == 2) {
    edges.push_back({active[0], active[1], dist(active[0], active[1])});
  }
  PhyloTree t;
  t.n = n;
  t.vertex_count = vertex_count;
  t.edges = std::move(edges);
  return t.contract_zero_internal();
}

std::vector<Topology> enumerate_trivalent(int n) {
  if (n < 3 || n > 9) throw BoundExceeded("leaf count outside 3..9");
  std::vector<std::vector<std::pair<int, int>>> shapes = {{{0, n}, {1, n}, {2, n}}};
  for (int leaf = 3; leaf < n; ++leaf) {
    int mid = n + leaf - 2;
    std::vector<std::vector<std::pair<int, int>>> grown;
    grown.reserve(shapes.size() * (2 * leaf - 3));
    for (const auto& shape : shapes)
      for (size_t e = 0; e < shape.size(); ++e) {
        auto next = shape;
        auto [u, v] = next[e];
        next[e] = {u, mid};
        next.push_back({mid, v});
        next.push_back({leaf, mid});
        grown.push_back(std::move(next));
      }
    shapes = std::move(grown);
  }
  std::vector<Topology> out;
  out.reserve(shapes.size());
  for (const auto& shape : shapes) {
    PhyloTree t;
    t.n = n;
    t.vertex_count = 2 * n - 2;
    for (auto [u, v] : shape) t.edges.push_back({u, v, Rat(0)});
    out.push_back(Topology(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cone_membership(const TropPoint& x, const Topology& T) {
  if (x.n() != T.n()) throw IncompatibleInputs("leaf counts differ");
  const int n = x.n();
  // An equality constraint with an infinite side imposes nothing.
  auto agree = [](const ExtRat& u, const ExtRat& v) {
    return !u.finite() || !v.finite() || u == v;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          std::array<ExtRat, 3> s = {x.at(Pair(a, b)) + x.at(Pair(c, d)),
                                     x.at(Pair(a, c)) + x.at(Pair(b, d)),
                                     x.at(Pair(a, d)) + x.at(Pair(b, c))};
          int p = T.quartet_pairing({a, b, c, d});
          if (p < 0) {
            if (!(agree(s[0], s[1]) && agree(s[0], s[2]) && agree(s[1], s[2])))
              return false;
          } else {
            int o1 = (p + 1) % 3, o2 = (p + 2) % 3;
            if (!(s[p] <= max(s[o1], s[o2]))) return false;
            if (!agree(s[o1], s[o2])) return false;
          }
        }
  return true;
}

std::pair<Topology, std::set<Pair>> infer_type(const TropPoint& x) {
  Verdict verdict = validate_point(x);
  if (!verdict.ok) {
    const auto& w = verdict.witness;
    throw NoConeFound("four-point failure at {" + std::to_string(w[0]) + "," +
                      std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                      std::to_string(w[3]) + "}");
  }
  std::set<Pair> J = vanishing_set(x);
  if (J.empty()) {
    // Strictly inside a maximal cone the reconstruction is trivalent and is
    // the only admissible shape; otherwise fall through to the scan.
    Topology T(neighbor_joining(x));
    if (T.trivalent()) return {std::move(T), std::move(J)};
  }
  auto all = enumerate_trivalent(x.n());
  for (Topology& T : all)
    if (cone_membership(x, T)) return {std::move(T), std::move(J)};
  throw NoConeFound("no trivalent shape admits the point");
}

}  // namespace tropgr
