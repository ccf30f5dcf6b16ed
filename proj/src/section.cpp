#include "tropgr/section.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/errors.hpp"
#include "tropgr/plucker.hpp"
#include "tropgr/poly_text.hpp"

namespace tropgr {

namespace {

std::string var_name(const Pair& p) {
  return "u_" + std::to_string(p.a) + "_" + std::to_string(p.b);
}

int pairing_code(const Topology& T, int a, int b, int c, int d) {
  std::array<int, 4> q{a, b, c, d};
  std::sort(q.begin(), q.end());
  return T.quartet_pairing(q);
}

// True when the shape resolves the quartet {a,b,c,d} with a,b on one side.
bool pairs_together(const Topology& T, int a, int b, int c, int d) {
  std::array<int, 4> q{a, b, c, d};
  std::sort(q.begin(), q.end());
  int code = T.quartet_pairing(q);
  if (code < 0) return false;
  auto pos = [&](int x) {
    return static_cast<int>(std::find(q.begin(), q.end(), x) - q.begin());
  };
  int pa = pos(a), pb = pos(b);
  // code c pairs position 0 with position c+1.
  auto with_first = [&](int p) { return p == 0 || p == code + 1; };
  return with_first(pa) == with_first(pb);
}

// Leaves k,l lie in the same component off the i-j path exactly when the
// quartet {i,j,k,l} resolves with k,l together.
bool same_branch(const Topology& T, const Pair& ij, int k, int l) {
  return pairs_together(T, k, l, ij.a, ij.b);
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) { return up[v] == v ? v : up[v] = find(up[v]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// Groups a set of leaves by an equivalence given as a pairwise test.
template <typename Same>
std::vector<std::vector<int>> group_by(const std::vector<int>& items, Same same) {
  UnionFind uf(static_cast<int>(items.size()));
  for (std::size_t p = 0; p < items.size(); ++p)
    for (std::size_t q = p + 1; q < items.size(); ++q)
      if (same(items[p], items[q])) uf.unite(static_cast<int>(p), static_cast<int>(q));
  std::map<int, std::vector<int>> buckets;
  for (std::size_t p = 0; p < items.size(); ++p)
    buckets[uf.find(static_cast<int>(p))].push_back(items[p]);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

// Orders one component: leaves nearer the i-j path first, the two leaves of
// the deepest cherry last. Every pair sharing a vertex counts as a cherry, so
// unresolved quartets satisfy the cherry test.
std::vector<int> order_branch(const Topology& T, int i, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  if (S.size() <= 2) return S;

  int ct = -1, cs = -1;
  for (std::size_t p = 0; p < S.size() && ct < 0; ++p) {
    for (std::size_t q = p + 1; q < S.size() && ct < 0; ++q) {
      bool cherry = true;
      for (int v : S) {
        if (v == S[p] || v == S[q]) continue;
        int code = pairing_code(T, i, S[p], S[q], v);
        if (code >= 0 && !pairs_together(T, S[p], S[q], i, v)) {
          cherry = false;
          break;
        }
      }
      if (cherry) {
        ct = S[p];
        cs = S[q];
      }
    }
  }
  if (ct < 0) throw IncompatibleInputs("component has no terminal cherry");

  std::vector<int> rest;
  for (int v : S)
    if (v != ct && v != cs) rest.push_back(v);
  // Blocks: subtrees hanging off the path from the component root to the
  // cherry; v,w share a block exactly when {i,v,w,s} resolves with v,w
  // together.
  std::vector<std::vector<int>> blocks = group_by(rest, [&](int v, int w) {
    return pairs_together(T, v, w, i, cs);
  });
  std::sort(blocks.begin(), blocks.end(), [&](const auto& B1, const auto& B2) {
    int v = B1.front(), w = B2.front();
    if (pairs_together(T, i, v, w, cs)) return true;
    if (pairs_together(T, i, w, v, cs)) return false;
    return v < w;
  });

  std::vector<int> out;
  for (auto& B : blocks) {
    std::vector<int> part = order_branch(T, i, std::move(B));
    out.insert(out.end(), part.begin(), part.end());
  }
  out.push_back(ct);
  out.push_back(cs);
  return out;
}

int sgn_ij(int i, int j) { return pair_sign(i, j); }

LaurentPoly scaled(int sign, const LaurentPoly& f) {
  return sign >= 0 ? f : -f;
}

}  // namespace

int CherryOrder::chain_of(int leaf) const {
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (int v : chains[c])
      if (v == leaf) return static_cast<int>(c);
  return -1;
}

int CherryOrder::pos_in_chain(int leaf) const {
  for (const auto& chain : chains)
    for (std::size_t p = 0; p < chain.size(); ++p)
      if (chain[p] == leaf) return static_cast<int>(p);
  return -1;
}

bool CherryOrder::less(int a, int b) const {
  if (a == b) return false;
  int c = chain_of(a);
  return c >= 0 && c == chain_of(b) && pos_in_chain(a) < pos_in_chain(b);
}

std::set<std::pair<int, int>> CherryOrder::strict_pairs() const {
  std::set<std::pair<int, int>> out;
  for (const auto& chain : chains)
    for (std::size_t p = 0; p < chain.size(); ++p)
      for (std::size_t q = p + 1; q < chain.size(); ++q)
        out.emplace(chain[p], chain[q]);
  return out;
}

CherryOrder cherry_order(const Topology& T, const Pair& ij) {
  if (ij.b > T.n()) throw IncompatibleInputs("anchor pair outside the leaf set");
  std::vector<int> others;
  for (int v = 1; v <= T.n(); ++v)
    if (!ij.contains(v)) others.push_back(v);

  CherryOrder order;
  order.ij = ij;
  for (auto& branch : group_by(others, [&](int k, int l) {
         return same_branch(T, ij, k, l);
       }))
    order.chains.push_back(order_branch(T, ij.a, std::move(branch)));
  return order;
}

bool verify_cherry_property(const CherryOrder& order, const Topology& T) {
  std::set<int> seen;
  for (const auto& chain : order.chains) {
    if (chain.empty()) return false;
    for (int v : chain) {
      if (v < 1 || v > T.n() || order.ij.contains(v)) return false;
      if (!seen.insert(v).second) return false;
    }
  }
  if (static_cast<int>(seen.size()) != T.n() - 2) return false;

  // The chains must be exactly the components off the i-j path.
  std::vector<int> others(seen.begin(), seen.end());
  std::set<std::set<int>> branches;
  for (auto& branch : group_by(others, [&](int k, int l) {
         return same_branch(T, order.ij, k, l);
       }))
    branches.insert(std::set<int>(branch.begin(), branch.end()));
  std::set<std::set<int>> given;
  for (const auto& chain : order.chains)
    given.insert(std::set<int>(chain.begin(), chain.end()));
  if (branches != given) return false;

  // For k before l before v in one chain, the quartet {i,k,l,v} must keep
  // {k,l} or {l,v} at a common vertex.
  int i = order.ij.a;
  for (const auto& chain : order.chains) {
    for (std::size_t p = 0; p < chain.size(); ++p)
      for (std::size_t q = p + 1; q < chain.size(); ++q)
        for (std::size_t r = q + 1; r < chain.size(); ++r) {
          int k = chain[p], l = chain[q], v = chain[r];
          if (pairing_code(T, i, k, l, v) < 0) continue;
          if (pairs_together(T, k, l, i, v)) continue;
          if (pairs_together(T, l, v, i, k)) continue;
          return false;
        }
  }
  return true;
}

std::set<Pair> IndexSet::meeting_part() const {
  std::set<Pair> out;
  for (const Pair& p : pairs)
    if (p.contains(ij.a) != p.contains(ij.b)) out.insert(p);
  return out;
}

bool verify_compatible(const CherryOrder& order, const std::set<Pair>& J,
                       const IndexSet& I) {
  if (I.ij != order.ij) return false;
  int i = I.ij.a, j = I.ij.b;
  std::set<Pair> covered;
  auto add = [&](const Pair& p) { covered.insert(p); };

  for (const auto& chain : order.chains) {
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
      int k = chain[idx];
      Pair ik(i, k), jk(j, k);
      bool vanishing_preds = true;
      int t = -1;  // deepest predecessor with neither row entry vanishing
      for (std::size_t p = 0; p < idx; ++p) {
        int l = chain[p];
        bool van = J.count(Pair(i, l)) > 0 || J.count(Pair(j, l)) > 0;
        if (!van) t = l;
        vanishing_preds = vanishing_preds && van;
      }

      if (I.contains(ik) && I.contains(jk)) {
        if (!vanishing_preds) return false;
        add(ik);
        add(jk);
        continue;
      }
      if (!I.contains(ik) && !I.contains(jk)) return false;
      bool keep_j = !I.contains(ik);  // solved row is the one absent from I
      // The kept row must be present for the whole chain.
      int kept = keep_j ? j : i;
      for (int l : chain)
        if (!I.contains(Pair(kept, l))) return false;
      if (t < 0) return false;
      Pair kt(k, t);
      if (!I.contains(kt)) return false;
      add(kt);
      add(Pair(kept, k));
    }
  }
  return covered == I.pairs;
}

IndexSet compatible_index_set_pref(const Pair& ij, const Topology& T,
                                   const std::set<Pair>& J,
                                   const CherryOrder& order,
                                   SidePreference pref) {
  if (order.ij != ij) throw IncompatibleInputs("order anchored at a different pair");
  int i = ij.a, j = ij.b;
  IndexSet I;
  I.ij = ij;

  for (const auto& chain : order.chains) {
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
      int k = chain[idx];
      bool vanishing_preds = true;
      int t = -1;
      for (std::size_t p = 0; p < idx; ++p) {
        int l = chain[p];
        bool van = J.count(Pair(i, l)) > 0 || J.count(Pair(j, l)) > 0;
        if (!van) t = l;
        vanishing_preds = vanishing_preds && van;
      }
      if (vanishing_preds) {
        I.pairs.insert(Pair(i, k));
        I.pairs.insert(Pair(j, k));
      } else {
        I.pairs.insert(Pair(k, t));
        I.pairs.insert(pref == SidePreference::KeepIRow ? Pair(i, k) : Pair(j, k));
      }
    }
  }

  if (static_cast<int>(I.pairs.size()) != 2 * (T.n() - 2) ||
      !verify_compatible(order, J, I))
    throw IncompatibleInputs("order does not admit a compatible index set");
  return I;
}

IndexSet compatible_index_set(const Pair& ij, const Topology& T,
                              const std::set<Pair>& J,
                              const CherryOrder& order) {
  return compatible_index_set_pref(ij, T, J, order, SidePreference::KeepIRow);
}

RewriteTable::RewriteTable(const Pair& ij, const CherryOrder& order,
                           const std::set<Pair>& J, const IndexSet& I)
    : ij_(ij), I_(I) {
  int i = ij.a, j = ij.b;
  int n = 2;
  for (const auto& chain : order.chains) n += static_cast<int>(chain.size());

  auto partial = [&](const Pair& p) -> LaurentPoly {
    if (I_.contains(p)) return LaurentPoly::variable(p);
    auto it = rr_.find(p);
    if (it == rr_.end())
      throw IncompatibleInputs("rewrite needs unsolved entry " + var_name(p));
    return it->second;
  };

  // Solve the missing row entry of each leaf against its deepest usable
  // predecessor, walking each chain front to back so dependencies exist.
  for (const auto& chain : order.chains) {
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
      int s = chain[idx];
      Pair is(i, s), js(j, s);
      bool has_i = I_.contains(is), has_j = I_.contains(js);
      if (has_i && has_j) continue;
      if (!has_i && !has_j)
        throw IncompatibleInputs("both row entries missing for leaf " +
                                 std::to_string(s));
      int t = -1;
      for (std::size_t p = 0; p < idx; ++p) {
        int l = chain[p];
        if (!J.count(Pair(i, l)) && !J.count(Pair(j, l))) t = l;
      }
      if (t < 0)
        throw IncompatibleInputs("no usable predecessor for leaf " +
                                 std::to_string(s));
      Pair it_(i, t), jt(j, t), st(s, t);
      // Quartet relation on {i,j,s,t} in antisymmetric form:
      //   e(s,t) u_st - e(i,s)e(j,t) u_is u_jt + e(i,t)e(j,s) u_it u_js = 0.
      if (!has_j) {
        if (!I_.contains(it_))
          throw IncompatibleInputs("pivot " + var_name(it_) + " outside the basis");
        LaurentPoly inner =
            scaled(sgn_ij(i, s) * sgn_ij(j, t), partial(is) * partial(jt)) -
            scaled(sgn_ij(s, t), partial(st));
        rr_[js] = scaled(sgn_ij(i, t) * sgn_ij(j, s),
                         LaurentPoly::variable(it_, -1) * inner);
      } else {
        if (!I_.contains(jt))
          throw IncompatibleInputs("pivot " + var_name(jt) + " outside the basis");
        LaurentPoly inner =
            scaled(sgn_ij(s, t), partial(st)) +
            scaled(sgn_ij(i, t) * sgn_ij(j, s), partial(it_) * partial(js));
        rr_[is] = scaled(sgn_ij(i, s) * sgn_ij(j, t),
                         LaurentPoly::variable(jt, -1) * inner);
      }
    }
  }

  // Expand every coordinate: rows first, then the disjoint pairs through the
  // quadratic combination of rows.
  for (const Pair& kl : all_pairs(n)) {
    if (kl == ij_ || !(kl.contains(i) || kl.contains(j))) continue;
    memo_[kl] = I_.contains(kl) ? LaurentPoly::variable(kl) : partial(kl);
  }
  for (const Pair& kl : all_pairs(n)) {
    if (kl == ij_ || kl.contains(i) || kl.contains(j)) continue;
    if (I_.contains(kl)) {
      memo_[kl] = LaurentPoly::variable(kl);
      continue;
    }
    int k = kl.a, l = kl.b;
    memo_[kl] =
        scaled(sgn_ij(i, k) * sgn_ij(j, l), memo_.at(Pair(i, k)) * memo_.at(Pair(j, l))) -
        scaled(sgn_ij(i, l) * sgn_ij(j, k), memo_.at(Pair(i, l)) * memo_.at(Pair(j, k)));
  }
}

const LaurentPoly& RewriteTable::expand(const Pair& kl) const {
  auto it = memo_.find(kl);
  if (it == memo_.end())
    throw IncompatibleInputs("no expansion for " + var_name(kl));
  return it->second;
}

std::pair<LaurentPoly, ExpVec> RewriteTable::rewrite_cleared(
    const LaurentPoly& f) const {
  ExpVec d;
  for (const auto& [e, c] : f.terms())
    for (const auto& [kl, k] : e)
      if (k < 0 && kl != ij_ && !I_.contains(kl)) {
        int& cur = d[kl];
        cur = std::max(cur, -k);
      }

  LaurentPoly g;
  for (const auto& [e, c] : f.terms()) {
    ExpVec direct;
    LaurentPoly term = LaurentPoly::constant(c);
    for (const auto& [kl, k] : e)
      if (kl == ij_ || I_.contains(kl)) direct[kl] = k;
    term = term * LaurentPoly::monomial(ValuedCoeff::one(), direct);
    // Non-basis factors, shifted by the clearing exponents.
    std::map<Pair, int> lifted;
    for (const auto& [kl, k] : e)
      if (kl != ij_ && !I_.contains(kl)) lifted[kl] = k;
    for (const auto& kv : d) lifted.insert({kv.first, 0});  // cleared vars multiply every term
    for (const auto& [kl, k] : lifted) {
      auto dit = d.find(kl);
      int a = k + (dit == d.end() ? 0 : dit->second);
      if (a < 0) throw IncompatibleInputs("clearing failed for " + var_name(kl));
      if (a > 0) term = term * expand(kl).pow(a);
    }
    g += term;
  }
  return {std::move(g), std::move(d)};
}

LaurentPoly RewriteTable::substitute(const LaurentPoly& f) const {
  auto [g, d] = rewrite_cleared(f);
  if (!d.empty())
    throw IncompatibleInputs("substitution requires nonnegative exponents");
  return g;
}

RewriteTable build_rewrite(const Pair& ij, const Topology& T,
                           const std::set<Pair>& J, const CherryOrder& order,
                           const IndexSet& I) {
  RewriteTable table(ij, order, J, I);
  for (const auto& [p, f] : table.rewrites())
    for (const auto& [e, c] : f.terms())
      for (const auto& [v, k] : e)
        if (!I.contains(v))
          throw CertificateFailure("entry for " + var_name(p) +
                                   " is not triangular");
  for (const ThreeTerm& rel : three_term_relations(T.n()))
    if (!table.substitute(three_term_u(rel.quartet, ij)).is_zero())
      throw CertificateFailure("table violates a quartet relation");
  return table;
}

Seminorm::Seminorm(TropPoint x, Pair ij, Topology T, std::set<Pair> J,
                   CherryOrder order, IndexSet I, RewriteTable table)
    : x_(std::move(x)),
      ij_(ij),
      T_(std::move(T)),
      J_(std::move(J)),
      order_(std::move(order)),
      I_(std::move(I)),
      table_(std::move(table)) {}

ExtRat Seminorm::coordinate(const Pair& kl) const {
  return kl == ij_ ? ExtRat(Rat(0)) : x_.rel(kl, ij_);
}

ExtRat Seminorm::eval(const LaurentPoly& f) const {
  // The anchor coordinate is exactly 1; drop it, rejecting only inversions of
  // vanishing coordinates.
  LaurentPoly reduced;
  for (const auto& [e, c] : f.terms()) {
    ExpVec e2;
    for (const auto& [kl, k] : e) {
      if (k < 0 && !coordinate(kl).finite())
        throw LocalizationViolation("inverted vanishing coordinate " +
                                    var_name(kl));
      if (kl != ij_) e2[kl] = k;
    }
    reduced.add_term(e2, c);
  }

  auto [g, d] = table_.rewrite_cleared(reduced);
  ExtRat best = ExtRat::neg_inf();
  for (const auto& [e, c] : g.terms()) {
    ExtRat v = c.log_abs();
    for (const auto& [kl, k] : e) v += coordinate(kl).times(k);
    best = max(best, v);
  }
  Rat shift;
  for (const auto& [kl, k] : d) shift = shift + coordinate(kl).value() * Rat(k);
  return best - shift;
}

SectionReport verify_section(const Seminorm& s) {
  for (const Pair& kl : all_pairs(s.point().n())) {
    if (kl == s.anchor()) continue;
    ExtRat got = s.eval(LaurentPoly::variable(kl));
    ExtRat want = s.coordinate(kl);
    if (got != want)
      return {false, var_name(kl) + ": evaluated to " + got.to_string() +
                         ", coordinate is " + want.to_string()};
  }
  return {};
}

namespace {

Seminorm assemble(const TropPoint& x, const Pair& ij, const Topology& T,
                  const std::set<Pair>& J) {
  CherryOrder order = cherry_order(T, ij);
  IndexSet I = compatible_index_set(ij, T, J, order);
  RewriteTable table = build_rewrite(ij, T, J, order, I);
  return Seminorm(x, ij, T, J, order, I, table);
}

}  // namespace

Seminorm section_point_at(const TropPoint& x, const Pair& ij) {
  if (!x.finite(ij))
    throw IncompatibleInputs("anchor coordinate " + var_name(ij) + " is -inf");
  auto inferred = infer_type(x);
  const std::set<Pair>& J = inferred.second;

  try {
    Seminorm s = assemble(x, ij, inferred.first, J);
    if (verify_section(s).ok) return s;
  } catch (const IncompatibleInputs&) {
  } catch (const CertificateFailure&) {
  }

  // The inferred shape is one admissible choice; when its order fails to
  // verify at this anchor, scan the other shapes whose closed cone contains x.
  std::vector<Topology> shapes;
  try {
    shapes = enumerate_trivalent(x.n());
  } catch (const BoundExceeded&) {
    throw CertificateFailure("no verified section at anchor " + ij.to_string());
  }
  for (const Topology& T : shapes) {
    if (T == inferred.first || !cone_membership(x, T)) continue;
    try {
      Seminorm s = assemble(x, ij, T, J);
      if (verify_section(s).ok) return s;
    } catch (const IncompatibleInputs&) {
    } catch (const CertificateFailure&) {
    }
  }
  throw CertificateFailure("no verified section at anchor " + ij.to_string());
}

Seminorm section_point(const TropPoint& x) {
  return section_point_at(x, x.anchor());
}

Seminorm naive_skeleton(const TropPoint& x) {
  Pair ij = x.anchor();
  auto inferred = infer_type(x);
  CherryOrder order = cherry_order(inferred.first, ij);
  IndexSet I;
  I.ij = ij;
  for (const Pair& p : pairs_meeting(ij, x.n())) I.pairs.insert(p);
  RewriteTable table(ij, order, inferred.second, I);
  return Seminorm(x, ij, inferred.first, inferred.second, order, I, table);
}

LaurentPoly three_term_u(const std::array<int, 4>& quartet, const Pair& anchor) {
  std::array<int, 4> q = quartet;
  std::sort(q.begin(), q.end());
  auto monomial = [&](int sign, const Pair& p1, const Pair& p2) {
    ExpVec e;
    if (p1 != anchor) e[p1] += 1;
    if (p2 != anchor) e[p2] += 1;
    return LaurentPoly::monomial(ValuedCoeff(Rat(sign)), e);
  };
  return monomial(1, Pair(q[0], q[1]), Pair(q[2], q[3])) +
         monomial(-1, Pair(q[0], q[2]), Pair(q[1], q[3])) +
         monomial(1, Pair(q[0], q[3]), Pair(q[1], q[2]));
}

LaurentPoly reanchor(const LaurentPoly& f, const Pair& from, const Pair& to) {
  if (from == to) return f;
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    ExpVec e2;
    int total = 0;
    for (const auto& [kl, k] : e) {
      if (kl == from) continue;  // the old anchor coordinate is 1
      total += k;
      if (kl != to) e2[kl] += k;
    }
    // Each old coordinate is the new one divided by the new value of the old
    // anchor pair.
    if (total != 0) e2[from] -= total;
    out.add_term(e2, c);
  }
  return out;
}

std::vector<LaurentPoly> test_battery(int n, const Pair& anchor,
                                      std::uint64_t seed) {
  std::vector<LaurentPoly> out;
  std::vector<Pair> pairs = all_pairs(n);

  for (const Pair& kl : pairs)
    if (kl != anchor) out.push_back(LaurentPoly::variable(kl));

  int p = anchor.a, q = anchor.b;
  for (const Pair& kl : pairs) {
    if (kl.contains(p) || kl.contains(q)) continue;
    int k = kl.a, l = kl.b;
    out.push_back(
        scaled(sgn_ij(p, k) * sgn_ij(q, l),
               LaurentPoly::variable(Pair(p, k)) * LaurentPoly::variable(Pair(q, l))) -
        scaled(sgn_ij(p, l) * sgn_ij(q, k),
               LaurentPoly::variable(Pair(p, l)) * LaurentPoly::variable(Pair(q, k))));
  }

  for (const ThreeTerm& rel : three_term_relations(n))
    out.push_back(three_term_u(rel.quartet, anchor));

  const long bases[] = {1, -1, 2, -2, 3, -3};
  std::mt19937_64 rng(seed);
  std::vector<Pair> usable;
  for (const Pair& kl : pairs)
    if (kl != anchor) usable.push_back(kl);
  for (int r = 0; r < 20; ++r) {
    LaurentPoly f;
    for (int term = 0; term < 2; ++term) {
      std::size_t which = rng() % 8;
      Rat base = which < 6 ? Rat(bases[which]) : Rat(which == 6 ? 1 : -1, 2);
      Rat tpow(static_cast<long>(rng() % 3) - 1);
      ValuedCoeff c(PuiseuxPoly::term(base, tpow));
      ExpVec e;
      int vars = 1 + static_cast<int>(rng() % 2);
      for (int v = 0; v < vars; ++v)
        e[usable[rng() % usable.size()]] += 1 + static_cast<int>(rng() % 2);
      f += LaurentPoly::monomial(c, e);
    }
    out.push_back(f);
  }
  return out;
}

bool verify_gluing(const TropPoint& x, const Pair& ij, const Pair& pq) {
  Seminorm a = section_point_at(x, ij);
  Seminorm b = section_point_at(x, pq);
  for (const LaurentPoly& f : test_battery(x.n(), pq, 0xB417E57u))
    if (b.eval(f) != a.eval(reanchor(f, pq, ij))) return false;
  for (const LaurentPoly& f : test_battery(x.n(), ij, 0xB417E58u))
    if (a.eval(f) != b.eval(reanchor(f, ij, pq))) return false;
  return true;
}

bool verify_same_values(const Seminorm& a, const Seminorm& b,
                        std::uint64_t seed) {
  if (a.anchor() != b.anchor() || a.point() != b.point()) return false;
  for (const LaurentPoly& f : test_battery(a.point().n(), a.anchor(), seed))
    if (a.eval(f) != b.eval(f)) return false;
  return true;
}

FiberReport sample_fiber_and_check_max(int n, std::uint64_t seed,
                                       int poly_count) {
  if (n < 4 || n > 8)
    throw BoundExceeded("fiber sampling supports 4 <= n <= 8");
  std::mt19937_64 rng(seed);
  const long bases[] = {1, -1, 2, -2, 3, -3};
  auto draw_coeff = [&](int tspread) {
    std::size_t which = rng() % 8;
    Rat base = which < 6 ? Rat(bases[which]) : Rat(which == 6 ? 1 : -1, 2);
    Rat tpow(static_cast<long>(rng() % (2 * tspread + 1)) - tspread);
    return ValuedCoeff(PuiseuxPoly::term(base, tpow));
  };

  FiberReport rep;
  std::vector<Pair> pairs = all_pairs(n);
  for (int round = 0; round < 3; ++round) {
    PluckerMatrix M(n);
    bool have_x = false;
    TropPoint x(4, [] {
      std::map<Pair, ExtRat> z;
      for (const Pair& p : all_pairs(4)) z[p] = ExtRat(Rat(0));
      return z;
    }());
    for (int tries = 0; tries < 64 && !have_x; ++tries) {
      for (int r = 0; r < 2; ++r)
        for (int col = 1; col <= n; ++col)
          M.at(r, col) = rng() % 6 == 0 ? ValuedCoeff() : draw_coeff(2);
      try {
        x = trop_pluecker(M);
        have_x = true;
      } catch (const RankDeficient&) {
      }
    }
    if (!have_x) throw CertificateFailure("could not draw a rank-2 matrix");

    Seminorm s = section_point(x);
    const Pair& ij = s.anchor();
    ValuedCoeff unit = M.minor(ij);
    auto evaluate = [&](const LaurentPoly& f) {
      ValuedCoeff acc;
      for (const auto& [e, c] : f.terms()) {
        ValuedCoeff term = c;
        for (const auto& [kl, k] : e) term *= (M.minor(kl) / unit).pow(k);
        acc += term;
      }
      return acc;
    };
    auto check = [&](const LaurentPoly& f) {
      ExtRat rho = evaluate(f).log_abs();
      ExtRat sigma = s.eval(f);
      bool fine = f.term_count() <= 1 ? rho == sigma : rho <= sigma;
      if (!fine)
        rep.failures.push_back(print_poly(f) + ": evaluation " + rho.to_string() +
                               " vs section " + sigma.to_string());
      ++rep.checked;
    };

    for (const Pair& kl : pairs)
      if (kl != ij) check(LaurentPoly::variable(kl));

    for (int r = 0; r < poly_count; ++r) {
      LaurentPoly f;
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int term = 0; term < terms; ++term) {
        ExpVec e;
        int vars = 1 + static_cast<int>(rng() % 2);
        for (int v = 0; v < vars; ++v) {
          Pair kl = pairs[rng() % pairs.size()];
          int exp = static_cast<int>(rng() % 5) - 2;
          if (exp == 0) exp = 1;
          if (exp < 0 && !x.finite(kl)) exp = -exp;
          e[kl] += exp;
          if (e[kl] == 0) e.erase(kl);
        }
        f += LaurentPoly::monomial(draw_coeff(1), e);
      }
      // A cancellation may leave a negative power on a vanishing coordinate.
      bool legal = true;
      for (const auto& [e, c] : f.terms())
        for (const auto& [kl, k] : e)
          if (k < 0 && !x.finite(kl)) legal = false;
      if (!legal) {
        --r;
        continue;
      }
      check(f);
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace tropgr
