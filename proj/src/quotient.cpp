#include "tropgr/quotient.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "tropgr/errors.hpp"
#include "tropgr/plucker.hpp"
#include "tropgr/tree.hpp"

namespace tropgr {

namespace {

// Exact Gaussian elimination on an n x (n+1) augmented system with a unique
// solution.
std::vector<Rat> solve(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw RankDeficient("singular normal equations");
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rat> out;
  for (std::size_t r = 0; r < n; ++r) out.push_back(m[r][n] / m[r][r]);
  return out;
}

// Pairing index of the sorted quartet q that puts the two members of s
// together: 0, 1, 2 match the conventions of Topology::quartet_pairing.
int expected_pairing(const std::array<int, 4>& q, const Pair& s) {
  int pa = -1, pb = -1;
  for (int i = 0; i < 4; ++i) {
    if (q[i] == s.a) pa = i;
    if (q[i] == s.b) pb = i;
  }
  if ((pa == 0 && pb == 1) || (pa == 2 && pb == 3)) return 0;
  if ((pa == 0 && pb == 2) || (pa == 1 && pb == 3)) return 1;
  return 2;
}

// T has an internal edge separating s from the rest iff every quartet
// extending s resolves with s paired together.
bool has_split(const Topology& T, const Pair& s, int n) {
  for (int c = 1; c <= n; ++c) {
    if (s.contains(c)) continue;
    for (int d = c + 1; d <= n; ++d) {
      if (s.contains(d)) continue;
      std::array<int, 4> q{s.a, s.b, c, d};
      std::sort(q.begin(), q.end());
      if (T.quartet_pairing(q) != expected_pairing(q, s)) return false;
    }
  }
  return true;
}

}  // namespace

const std::map<Pair, int>& CutLattice::generator(int k) const {
  if (k < 1 || k > n) throw IncompatibleInputs("leaf index outside 1..n");
  return gens[k - 1];
}

CutLattice cut_metrics(int n) {
  if (n < 3) throw IncompatibleInputs("cut metrics need n >= 3");
  CutLattice L;
  L.n = n;
  for (int k = 1; k <= n; ++k) {
    std::map<Pair, int> g;
    for (const Pair& p : all_pairs(n)) g[p] = p.contains(k) ? 1 : 0;
    L.gens.push_back(std::move(g));
  }
  return L;
}

std::map<Pair, Rat> project_mod_lineality(const TropPoint& x) {
  const int n = x.n();
  if (n < 3) throw IncompatibleInputs("projection needs n >= 3");
  std::vector<Rat> b(n, Rat(0));
  for (const auto& [p, v] : x.entries()) {
    if (!v.finite())
      throw IncompatibleInputs("projection needs finite entries");
    b[p.a - 1] += v.value();
    b[p.b - 1] += v.value();
  }
  // Normal equations against the Gram matrix (n-2) Id + all-ones.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(1)));
  for (int i = 0; i < n; ++i) {
    m[i][i] = Rat(n - 1);
    m[i][n] = b[i];
  }
  const std::vector<Rat> lam = solve(std::move(m));
  std::map<Pair, Rat> out;
  for (const auto& [p, v] : x.entries())
    out[p] = v.value() - lam[p.a - 1] - lam[p.b - 1];
  return out;
}

bool SplitComplex::adjacent(const Pair& a, const Pair& b) const {
  if (a == b) return false;
  return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
}

int SplitComplex::degree(const Pair& v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool SplitComplex::regular() const {
  if (vertices.empty()) return true;
  const int d = degree(vertices.front());
  for (const Pair& v : vertices)
    if (degree(v) != d) return false;
  return true;
}

int SplitComplex::girth() const {
  std::map<Pair, std::vector<Pair>> adj;
  for (const Pair& v : vertices) adj[v];
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // BFS from every root; a non-tree edge at depths d_u, d_w closes a walk of
  // length d_u + d_w + 1 containing a cycle, and roots on a shortest cycle
  // realize its exact length.
  int best = 0;
  for (const Pair& root : vertices) {
    std::map<Pair, int> dist;
    std::map<Pair, Pair> parent;
    std::deque<Pair> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Pair u = queue.front();
      queue.pop_front();
      for (const Pair& w : adj.at(u)) {
        auto it = dist.find(w);
        if (it == dist.end()) {
          dist[w] = dist.at(u) + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (!(parent.count(u) && parent.at(u) == w)) {
          const int len = dist.at(u) + it->second + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool SplitComplex::petersen() const {
  if (n != 5 || vertices.size() != 10 || edges.size() != 15) return false;
  if (!regular() || degree(vertices.front()) != 3) return false;
  if (girth() != 5) return false;
  for (const Pair& a : vertices)
    for (const Pair& b : vertices) {
      if (!(a < b)) continue;
      const bool disjoint = !b.contains(a.a) && !b.contains(a.b);
      if (adjacent(a, b) != disjoint) return false;
    }
  return true;
}

SplitComplex split_complex(int n) {
  if (n < 4 || n > 7)
    throw BoundExceeded("split complex limited to 4 <= n <= 7");
  SplitComplex g;
  g.n = n;
  g.vertices = all_pairs(n);
  for (const Topology& T : enumerate_trivalent(n)) {
    std::vector<Pair> splits;
    for (const Pair& s : g.vertices)
      if (has_split(T, s, n)) splits.push_back(s);
    for (std::size_t i = 0; i < splits.size(); ++i)
      for (std::size_t j = i + 1; j < splits.size(); ++j) {
        const Pair& s1 = splits[i];
        const Pair& s2 = splits[j];
        // Complementary labels (possible only for n = 4) name the same
        // internal edge, not two cohabiting splits.
        if (n == 4 && !s2.contains(s1.a) && !s2.contains(s1.b)) continue;
        g.edges.insert({s1, s2});
      }
  }
  return g;
}

std::string split_complex_json(const SplitComplex& g) {
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Pair& v : g.vertices) verts.push_back({v.a, v.b});
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({{a.a, a.b}, {b.a, b.b}});
  nlohmann::ordered_json checks;
  checks["regular"] = g.regular();
  checks["girth"] = g.girth();
  checks["petersen"] = g.petersen();
  nlohmann::ordered_json doc;
  doc["vertices"] = verts;
  doc["edges"] = edges;
  doc["checks"] = checks;
  return doc.dump(2);
}

std::vector<ExpVec> invariant_monomials(const Pair& ij, int n) {
  if (n < 4) throw IncompatibleInputs("invariant monomials need n >= 4");
  if (ij.b > n) throw IncompatibleInputs("anchor pair outside the leaf set");
  std::vector<ExpVec> out;
  for (int k = 1; k <= n; ++k) {
    if (ij.contains(k)) continue;
    for (int l = k + 1; l <= n; ++l) {
      if (ij.contains(l)) continue;
      const Pair kl(k, l);
      out.push_back(ExpVec{
          {ij, 1}, {kl, 1}, {Pair(ij.a, k), -1}, {Pair(ij.b, l), -1}});
      out.push_back(ExpVec{
          {ij, 1}, {kl, 1}, {Pair(ij.a, l), -1}, {Pair(ij.b, k), -1}});
    }
  }
  return out;
}

bool invariants_agree(const Seminorm& a, const Seminorm& b) {
  if (a.anchor() != b.anchor() || a.point().n() != b.point().n())
    throw IncompatibleInputs("seminorms live in different charts");
  for (const ExpVec& e : invariant_monomials(a.anchor(), a.point().n())) {
    const LaurentPoly m = LaurentPoly::monomial(ValuedCoeff::one(), e);
    if (a.eval(m) != b.eval(m)) return false;
  }
  return true;
}

bool verify_descent(const TropPoint& x, const std::vector<Rat>& lambda) {
  const int n = x.n();
  if (static_cast<int>(lambda.size()) != n)
    throw IncompatibleInputs("expected one shift entry per leaf");
  for (const Pair& p : all_pairs(n))
    if (!x.finite(p)) throw IncompatibleInputs("descent input must be finite");
  if (!validate_point(x).ok)
    throw IncompatibleInputs("descent input fails the tropical relations");
  std::map<Pair, ExtRat> shifted;
  for (const Pair& p : all_pairs(n))
    shifted.emplace(
        p, ExtRat(x.at(p).value() + lambda[p.a - 1] + lambda[p.b - 1]));
  const TropPoint moved(n, shifted);
  return invariants_agree(section_point(x), section_point(moved));
}

}  // namespace tropgr
