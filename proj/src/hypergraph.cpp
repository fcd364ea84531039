#include "mcpp/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace mcpp {

namespace {

Mono intersect(const Mono& a, const Mono& b) {
  Mono out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const Mono& a, const Mono& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Hypergraph::Hypergraph(std::vector<int> v, std::vector<Edge> e)
    : vertices(std::move(v)), edges(std::move(e)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& ed : edges) ed = sorted_mono(std::move(ed));
  std::sort(edges.begin(), edges.end(), MonoLess{});
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& ed : edges) {
    if (ed.size() < 2) throw ValidationError("hyperedge must have at least two blocks");
    for (int b : ed)
      if (!has_vertex(b)) throw ValidationError("hyperedge uses unknown vertex " + std::to_string(b));
  }
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e, MonoLess{});
}

bool Hypergraph::has_vertex(int b) const {
  return std::binary_search(vertices.begin(), vertices.end(), b);
}

size_t Hypergraph::rank() const {
  size_t r = 0;
  for (const auto& e : edges) r = std::max(r, e.size());
  return r;
}

bool Hypergraph::is_subhypergraph_of(const Hypergraph& h) const {
  for (int v : vertices)
    if (!h.has_vertex(v)) return false;
  for (const auto& e : edges)
    if (!h.has_edge(e)) return false;
  return true;
}

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<int> v = a.vertices;
  v.insert(v.end(), b.vertices.begin(), b.vertices.end());
  std::vector<Edge> e = a.edges;
  e.insert(e.end(), b.edges.begin(), b.edges.end());
  return Hypergraph(std::move(v), std::move(e));
}

bool is_valid_join_tree(const Hypergraph& h, const JoinTree& t) {
  if (t.nodes != h.edges) return false;
  const size_t m = t.nodes.size();
  if (m == 0) return t.tree_edges.empty();
  if (t.tree_edges.size() != m - 1) return false;
  UnionFind uf(m);
  std::vector<std::vector<int>> adj(m);
  for (auto [i, j] : t.tree_edges) {
    if (i < 0 || j < 0 || i >= static_cast<int>(m) || j >= static_cast<int>(m) || i == j) return false;
    if (!uf.unite(i, j)) return false;  // cycle
    adj[static_cast<size_t>(i)].push_back(j);
    adj[static_cast<size_t>(j)].push_back(i);
  }
  // Running intersection for every node pair, along the unique tree path.
  for (size_t s = 0; s < m; ++s) {
    std::vector<int> parent(m, -1);
    std::queue<int> q;
    q.push(static_cast<int>(s));
    parent[s] = static_cast<int>(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[static_cast<size_t>(u)])
        if (parent[static_cast<size_t>(w)] < 0) {
          parent[static_cast<size_t>(w)] = u;
          q.push(w);
        }
    }
    for (size_t tgt = s + 1; tgt < m; ++tgt) {
      const Mono need = intersect(t.nodes[s], t.nodes[tgt]);
      if (need.empty()) continue;
      for (int u = static_cast<int>(tgt); u != static_cast<int>(s); u = parent[static_cast<size_t>(u)])
        if (!subset(need, t.nodes[static_cast<size_t>(u)])) return false;
    }
  }
  return true;
}

namespace {

// GYO reduction: repeatedly remove vertices confined to one edge and edges
// contained in other edges. Empty residual <=> alpha-acyclic.
Hypergraph gyo_residual(const Hypergraph& h) {
  std::vector<Mono> edges = h.edges;
  bool changed = true;
  while (changed && !edges.empty()) {
    changed = false;
    // Vertices occurring in exactly one edge are ears' private vertices.
    std::map<int, int> occurrences;
    for (const auto& e : edges)
      for (int b : e) ++occurrences[b];
    for (auto& e : edges) {
      Mono kept;
      for (int b : e)
        if (occurrences[b] > 1) kept.push_back(b);
      if (kept.size() != e.size()) {
        e = std::move(kept);
        changed = true;
      }
    }
    // Remove empty edges and edges contained in another edge.
    std::vector<Mono> next;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].empty()) {
        changed = true;
        continue;
      }
      bool contained = false;
      for (size_t j = 0; j < edges.size() && !contained; ++j)
        if (j != i && subset(edges[i], edges[j]) && !(edges[i] == edges[j] && i < j))
          contained = true;
      if (contained)
        changed = true;
      else
        next.push_back(edges[i]);
    }
    edges = std::move(next);
  }
  std::vector<int> verts;
  for (const auto& e : edges) verts.insert(verts.end(), e.begin(), e.end());
  Hypergraph res;
  res.vertices = verts;
  std::sort(res.vertices.begin(), res.vertices.end());
  res.vertices.erase(std::unique(res.vertices.begin(), res.vertices.end()), res.vertices.end());
  std::sort(edges.begin(), edges.end(), MonoLess{});
  res.edges = std::move(edges);
  return res;
}

JoinTree max_weight_spanning_tree(const Hypergraph& h) {
  JoinTree t;
  t.nodes = h.edges;
  const size_t m = t.nodes.size();
  if (m <= 1) return t;
  struct Cand {
    size_t w;
    int i, j;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < static_cast<int>(m); ++i)
    for (int j = i + 1; j < static_cast<int>(m); ++j)
      cands.push_back({intersect(t.nodes[static_cast<size_t>(i)], t.nodes[static_cast<size_t>(j)]).size(), i, j});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  UnionFind uf(m);
  for (const auto& c : cands)
    if (uf.unite(c.i, c.j)) t.tree_edges.emplace_back(c.i, c.j);
  return t;
}

}  // namespace

AcyclicityResult is_alpha_acyclic(const Hypergraph& h) {
  AcyclicityResult res;
  Hypergraph residual = gyo_residual(h);
  res.acyclic = residual.edges.empty();
  if (res.acyclic) {
    JoinTree t = max_weight_spanning_tree(h);
    if (!is_valid_join_tree(h, t))
      throw InvariantViolation("GYO succeeded but the spanning tree fails running intersection");
    res.join_tree = std::move(t);
  } else {
    res.irreducible = std::move(residual);
  }
  return res;
}

JoinTree build_join_tree(const Hypergraph& h) {
  JoinTree t = max_weight_spanning_tree(h);
  if (!is_valid_join_tree(h, t))
    throw ValidationError("hypergraph is not alpha-acyclic: no join tree exists");
  return t;
}

std::vector<JoinTree> enumerate_join_trees(const Hypergraph& h, size_t max_edges) {
  const size_t m = h.edges.size();
  if (m > max_edges)
    throw GuardExceeded("enumerate_join_trees: " + std::to_string(m) + " edges exceed guard " +
                        std::to_string(max_edges));
  std::vector<JoinTree> out;
  if (m <= 1) {
    JoinTree t;
    t.nodes = h.edges;
    if (is_valid_join_tree(h, t)) out.push_back(std::move(t));
    return out;
  }
  // All labeled spanning trees via Pruefer sequences, filtered by the
  // running-intersection property.
  std::vector<int> seq(m - 2, 0);
  for (;;) {
    // Decode.
    std::vector<int> degree(m, 1);
    for (int s : seq) ++degree[static_cast<size_t>(s)];
    JoinTree t;
    t.nodes = h.edges;
    std::set<int> leaves;
    for (size_t i = 0; i < m; ++i)
      if (degree[i] == 1) leaves.insert(static_cast<int>(i));
    std::vector<int> work(seq);
    for (int s : work) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      t.tree_edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
      if (--degree[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    t.tree_edges.emplace_back(std::min(a, b), std::max(a, b));
    if (is_valid_join_tree(h, t)) out.push_back(std::move(t));
    // Next sequence.
    size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == static_cast<int>(m) - 1) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return out;
}

bool is_downward_closed(const Hypergraph& h) {
  for (const auto& e : h.edges) {
    const size_t n = e.size();
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
      Mono sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(e[i]);
      if (sub.size() > 1 && sub.size() < n && !h.has_edge(sub)) return false;
    }
  }
  return true;
}

Hypergraph downward_closure(const Hypergraph& h) {
  std::set<Mono, MonoLess> all(h.edges.begin(), h.edges.end());
  for (const auto& e : h.edges) {
    const size_t n = e.size();
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
      Mono sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(e[i]);
      if (sub.size() > 1) all.insert(sub);
    }
  }
  Hypergraph out;
  out.vertices = h.vertices;
  out.edges.assign(all.begin(), all.end());
  return out;
}

}  // namespace mcpp
