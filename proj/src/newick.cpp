#include "tropgr/newick.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <vector>

#include "tropgr/errors.hpp"

namespace tropgr {
namespace {

struct RawNode {
  int label = -1;  // >= 1 for leaves
  std::vector<int> kids;
  Rat weight;  // edge toward the parent, zero when absent
  bool has_weight = false;
};

struct Parser {
  const std::string& s;
  size_t pos = 0;
  std::vector<RawNode> pool;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos);
  }
  bool peek(char c) {
    ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c, const char* what) {
    ws();
    if (pos >= s.size() || s[pos] != c) fail(what);
    ++pos;
  }

  int parse_label() {
    ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected '(' or a leaf label");
    return std::stoi(s.substr(start, pos - start));
  }

  Rat parse_length() {
    ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
            s[pos] == '/'))
      ++pos;
    Rat out;
    if (pos == start || !Rat::try_parse(s.substr(start, pos - start), out)) {
      pos = start;
      fail("expected an edge length");
    }
    return out;
  }

  int node() {
    ws();
    int idx = static_cast<int>(pool.size());
    pool.push_back(RawNode{});
    if (peek('(')) {
      ++pos;
      while (true) {
        int kid = node();
        pool[idx].kids.push_back(kid);
        if (!peek(',')) break;
        ++pos;
      }
      expect(')', "expected ')' or ','");
    } else {
      pool[idx].label = parse_label();
    }
    if (peek(':')) {
      ++pos;
      pool[idx].weight = parse_length();
      pool[idx].has_weight = true;
    }
    return idx;
  }

  int parse_tree() {
    int root = node();
    expect(';', "expected ';'");
    ws();
    if (pos != s.size()) fail("trailing input after ';'");
    return root;
  }
};

PhyloTree assemble(const std::vector<RawNode>& pool, int root, bool suppress) {
  if (pool[root].has_weight)
    throw InvalidTree("the outermost vertex has no parent edge");

  std::vector<int> labels;
  for (const auto& nd : pool)
    if (nd.label >= 0) labels.push_back(nd.label);
  const int n = static_cast<int>(labels.size());
  std::sort(labels.begin(), labels.end());
  for (int k = 0; k < n; ++k)
    if (labels[k] != k + 1)
      throw InvalidTree("leaf labels must be exactly 1..n");

  // Leaf label k becomes vertex k-1; inner nodes get ids from n upward.
  std::vector<int> vid(pool.size(), -1);
  int next_inner = n;
  std::function<void(int)> assign = [&](int idx) {
    vid[idx] = pool[idx].label >= 1 ? pool[idx].label - 1 : next_inner++;
    for (int kid : pool[idx].kids) assign(kid);
  };
  assign(root);

  std::vector<PhyloTree::Edge> live;
  std::function<void(int)> collect = [&](int idx) {
    for (int kid : pool[idx].kids) {
      live.push_back({vid[idx], vid[kid], pool[kid].weight});
      collect(kid);
    }
  };
  collect(root);

  if (suppress) {
    // Contract inner vertices of degree two, adding their edge weights.
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::vector<size_t>> incident;
      for (size_t i = 0; i < live.size(); ++i) {
        incident[live[i].u].push_back(i);
        incident[live[i].v].push_back(i);
      }
      for (const auto& [v, idxs] : incident) {
        if (v < n || idxs.size() != 2) continue;
        const auto e1 = live[idxs[0]], e2 = live[idxs[1]];
        int a = e1.u == v ? e1.v : e1.u;
        int b = e2.u == v ? e2.v : e2.u;
        std::vector<PhyloTree::Edge> kept;
        for (size_t i = 0; i < live.size(); ++i)
          if (i != idxs[0] && i != idxs[1]) kept.push_back(live[i]);
        kept.push_back({a, b, e1.w + e2.w});
        live = std::move(kept);
        changed = true;
        break;
      }
    }
  }

  // Compact the surviving vertex ids.
  std::vector<int> remap(next_inner, -1);
  for (int v = 0; v < n; ++v) remap[v] = v;
  int next = n;
  for (const auto& e : live) {
    if (remap[e.u] == -1) remap[e.u] = next++;
    if (remap[e.v] == -1) remap[e.v] = next++;
  }
  PhyloTree t;
  t.n = n;
  t.vertex_count = next;
  for (const auto& e : live) t.edges.push_back({remap[e.u], remap[e.v], e.w});
  t.validate();
  return t;
}

}  // namespace

PhyloTree newick_parse(const std::string& text, bool suppress_degree_two) {
  Parser p{text, 0, {}};
  int root = p.parse_tree();
  return assemble(p.pool, root, suppress_degree_two);
}

std::string newick_print(const PhyloTree& t) {
  t.validate();
  if (t.n < 3) throw InvalidTree("printing needs at least three leaves");
  auto adj = t.adjacency();
  std::function<std::pair<std::string, int>(int, int)> enc =
      [&](int v, int from) -> std::pair<std::string, int> {
    if (t.is_leaf(v)) return {std::to_string(v + 1), v + 1};
    std::vector<std::pair<int, std::string>> kids;
    for (auto [w, idx] : adj[v]) {
      if (w == from) continue;
      auto [text, mn] = enc(w, v);
      kids.push_back({mn, text + ":" + t.edges[idx].w.to_string()});
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
  int root = adj[0][0].first;
  std::vector<std::pair<int, std::string>> parts;
  for (auto [w, idx] : adj[root]) {
    auto [text, mn] = enc(w, root);
    parts.push_back({mn, text + ":" + t.edges[idx].w.to_string()});
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i].second;
  }
  s += ");";
  return s;
}

}  // namespace tropgr
