#ifndef DILABEL_TESTS_ORACLES_HPP
#define DILABEL_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call into the library
// beyond reading a Digraph's edges, so they can check it independently.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "dilabel/digraph.hpp"

namespace dilabel::testing {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// All-pairs directed BFS distances.
inline std::vector<std::vector<std::size_t>> bfs_distances(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : d.edges()) adj[e.from].push_back(e.to);
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kUnreachable));
  for (Vertex s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adj[v]) {
        if (dist[s][w] == kUnreachable) {
          dist[s][w] = dist[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

/// Definitional check by double loop over BFS distances.
inline bool brute_is_valid(const Digraph& d, const std::vector<std::uint32_t>& f, unsigned j,
                           unsigned k) {
  const auto dist = bfs_distances(d);
  const std::size_t n = d.num_vertices();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const long diff = std::labs(static_cast<long>(f[x]) - static_cast<long>(f[y]));
      if (dist[x][y] == 1 && diff < static_cast<long>(j)) return false;
      if (dist[x][y] == 2 && diff < static_cast<long>(k)) return false;
    }
  }
  return true;
}

/// Number of violating ordered pairs, by double loop.
inline std::size_t brute_violation_count(const Digraph& d, const std::vector<std::uint32_t>& f,
                                         unsigned j, unsigned k) {
  const auto dist = bfs_distances(d);
  const std::size_t n = d.num_vertices();
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const long diff = std::labs(static_cast<long>(f[x]) - static_cast<long>(f[y]));
      if (dist[x][y] == 1 && diff < static_cast<long>(j)) ++count;
      if (dist[x][y] == 2 && diff < static_cast<long>(k)) ++count;
    }
  }
  return count;
}

/// Whether some labeling with every label in [0, span] is valid, by plain
/// enumeration of all (span+1)^n assignments (pairs checked incrementally
/// in id order).
inline bool brute_span_feasible(const Digraph& d, unsigned j, unsigned k, unsigned span) {
  const std::size_t n = d.num_vertices();
  const auto dist = bfs_distances(d);
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> checks(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      unsigned need = 0;
      if (dist[x][y] == 2 || dist[y][x] == 2) need = k;
      if (dist[x][y] == 1 || dist[y][x] == 1) need = j;
      if (need) checks[y].push_back({x, need});
    }
  }
  std::vector<unsigned> f(n, 0);
  std::size_t i = 0;
  std::vector<unsigned> next(n, 0);
  // Iterative odometer with prefix pruning.
  while (true) {
    if (i == n) return true;
    bool placed = false;
    while (next[i] <= span) {
      f[i] = next[i]++;
      bool ok = true;
      for (auto [x, need] : checks[i]) {
        unsigned diff = f[i] > f[x] ? f[i] - f[x] : f[x] - f[i];
        if (diff < need) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      if (i < n) next[i] = 0;
    } else {
      if (i == 0) return false;
      --i;
    }
  }
}

/// Minimum span by brute_span_feasible for span = 0, 1, 2, ...
inline unsigned brute_min_span(const Digraph& d, unsigned j, unsigned k) {
  for (unsigned s = 0;; ++s)
    if (brute_span_feasible(d, j, k, s)) return s;
}

/// Longest simple dipath by enumerating every simple dipath.
inline std::size_t brute_longest_dipath(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<bool> used(n, false);
  std::size_t best = 0;
  auto dfs = [&](auto&& self, Vertex v, std::size_t len) -> void {
    best = std::max(best, len);
    used[v] = true;
    for (const Edge& e : d.edges())
      if (e.from == v && !used[e.to]) self(self, e.to, len + 1);
    used[v] = false;
  };
  for (Vertex v = 0; v < n; ++v) dfs(dfs, v, 0);
  return best;
}

/// Whether the underlying graph has a closed walk of odd length (searched
/// over (vertex, parity) states).
inline bool has_odd_closed_walk(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : d.edges()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::array<bool, 2>> seen(n, {false, false});
    std::deque<std::pair<Vertex, int>> queue{{s, 0}};
    seen[s][0] = true;
    while (!queue.empty()) {
      auto [v, parity] = queue.front();
      queue.pop_front();
      for (Vertex w : adj[v]) {
        int p = 1 - parity;
        if (!seen[w][p]) {
          seen[w][p] = true;
          queue.push_back({w, p});
        }
      }
    }
    if (seen[s][1]) return true;
  }
  return false;
}

}  // namespace dilabel::testing

#endif  // DILABEL_TESTS_ORACLES_HPP
