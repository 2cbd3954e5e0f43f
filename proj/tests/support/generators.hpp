#ifndef DILABEL_TESTS_GENERATORS_HPP
#define DILABEL_TESTS_GENERATORS_HPP

// Digraph generators for property and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "dilabel/digraph.hpp"

namespace dilabel::testing {

using Rng = std::mt19937_64;

inline std::vector<std::pair<Vertex, Vertex>> unordered_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

/// Every strongly simple digraph on n labelled vertices: each unordered pair
/// is absent, a->b or b->a (3^(n choose 2) digraphs).
inline void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& fn) {
  const auto pairs = unordered_pairs(n);
  std::vector<int> state(pairs.size(), 0);
  std::vector<Edge> edges;
  while (true) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) edges.push_back({pairs[i].first, pairs[i].second});
      if (state[i] == 2) edges.push_back({pairs[i].second, pairs[i].first});
    }
    fn(Digraph(n, edges));
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) return;
    ++state[i];
  }
}

/// Random strongly simple digraph: each unordered pair gets an edge with
/// probability p, in a random direction.
inline Digraph random_digraph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution keep(p);
  std::bernoulli_distribution flip(0.5);
  std::vector<Edge> edges;
  for (auto [a, b] : unordered_pairs(n)) {
    if (!keep(rng)) continue;
    edges.push_back(flip(rng) ? Edge{a, b} : Edge{b, a});
  }
  return Digraph(n, edges);
}

/// Tree edges decoded from a Pruefer sequence (values in [0, n)).
inline std::vector<std::pair<Vertex, Vertex>> pruefer_tree(std::size_t n,
                                                           const std::vector<Vertex>& seq) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n < 2) return edges;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex w = u + 1;
  while (degree[w] != 1) ++w;
  edges.emplace_back(u, w);
  return edges;
}

/// Every labelled tree on n vertices (n^(n-2) of them).
inline void for_each_tree(std::size_t n,
                          const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&)>& fn) {
  if (n <= 2) {
    fn(pruefer_tree(n, {}));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    fn(pruefer_tree(n, seq));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) return;
    ++seq[i];
  }
}

/// Orientation of undirected edges: bit i of `mask` reverses edge i.
inline Digraph orient(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::uint64_t mask) {
  std::vector<Edge> directed;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    directed.push_back(((mask >> i) & 1u) ? Edge{b, a} : Edge{a, b});
  }
  return Digraph(n, directed);
}

/// Uniform random labelled tree with a uniform random orientation.
inline Digraph random_ditree(std::size_t n, Rng& rng) {
  std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (Vertex& x : seq) x = pick(rng);
  std::uniform_int_distribution<std::uint64_t> bits;
  const auto edges = pruefer_tree(n, seq);
  std::vector<Edge> directed;
  for (auto [a, b] : edges) directed.push_back((bits(rng) & 1u) ? Edge{b, a} : Edge{a, b});
  return Digraph(n, directed);
}

/// Random recursive tree (vertex i attaches to a uniform earlier vertex) with
/// random orientation; cheap for large n.
inline Digraph random_recursive_ditree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(n);
  std::bernoulli_distribution flip(0.5);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    Vertex p = pick(rng);
    edges.push_back(flip(rng) ? Edge{p, v} : Edge{v, p});
  }
  return Digraph(n, edges);
}

/// Random recursive tree whose vertices carry levels in {0,1,2,3}; every
/// edge points from the lower to the higher level, so no dipath is longer
/// than 3.
inline Digraph random_layered_ditree(std::size_t n, Rng& rng) {
  std::vector<int> level(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n);
  std::uniform_int_distribution<int> start(0, 3);
  std::bernoulli_distribution coin(0.5);
  if (n > 0) level[0] = start(rng);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    Vertex p = pick(rng);
    int up = level[p] + 1;
    int down = level[p] - 1;
    if (down < 0 || (up <= 3 && coin(rng))) {
      level[v] = up;
      edges.push_back({p, v});
    } else {
      level[v] = down;
      edges.push_back({v, p});
    }
  }
  return Digraph(n, edges);
}

/// Random digraph whose underlying graph is bipartite: random sides, each
/// cross pair an edge with probability p in a random direction.
inline Digraph random_bipartite_digraph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution side(0.5);
  std::vector<int> part(n);
  for (auto& s : part) s = side(rng);
  std::bernoulli_distribution keep(p);
  std::bernoulli_distribution flip(0.5);
  std::vector<Edge> edges;
  for (auto [a, b] : unordered_pairs(n)) {
    if (part[a] == part[b] || !keep(rng)) continue;
    edges.push_back(flip(rng) ? Edge{a, b} : Edge{b, a});
  }
  return Digraph(n, edges);
}

/// Random spanning subdigraph: keeps each edge with probability p.
inline Digraph random_edge_subset(const Digraph& d, double p, Rng& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (const Edge& e : d.edges())
    if (keep(rng)) edges.push_back(e);
  return Digraph(d.num_vertices(), edges);
}

}  // namespace dilabel::testing

#endif  // DILABEL_TESTS_GENERATORS_HPP
