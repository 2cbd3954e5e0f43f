#include <algorithm>
#include <deque>

#include "dilabel/digraph.hpp"

namespace dilabel {

namespace {

// Depth-limited simple-dipath search. Returns the longest length found,
// stopping early once `cap` is reached.
std::size_t capped_dipath_from(const Digraph& d, Vertex v, std::size_t depth,
                               std::size_t cap, std::vector<bool>& on_path) {
  if (depth >= cap) return depth;
  std::size_t best = depth;
  on_path[v] = true;
  for (Vertex w : d.out_neighbors(v)) {
    if (on_path[w]) continue;
    best = std::max(best, capped_dipath_from(d, w, depth + 1, cap, on_path));
    if (best >= cap) break;
  }
  on_path[v] = false;
  return best;
}

}  // namespace

std::optional<std::vector<Vertex>> topological_order(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::size_t> indeg(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : d.out_neighbors(order[head])) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::optional<Bipartition> bipartition(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  constexpr std::uint8_t kUnset = 2;
  Bipartition part;
  part.side.assign(n, kUnset);
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < n; ++start) {
    if (part.side[start] != kUnset) continue;
    part.side[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (auto list : {d.out_neighbors(v), d.in_neighbors(v)}) {
        for (Vertex w : list) {
          if (part.side[w] == kUnset) {
            part.side[w] = static_cast<std::uint8_t>(1 - part.side[v]);
            queue.push_back(w);
          } else if (part.side[w] == part.side[v]) {
            return std::nullopt;
          }
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (part.side[v] == 0 ? part.a : part.b).push_back(v);
  return part;
}

LongestDipath longest_dipath(const Digraph& d, std::size_t cap) {
  if (auto order = topological_order(d)) {
    std::vector<std::size_t> ending(d.num_vertices(), 0);
    std::size_t best = 0;
    for (Vertex v : *order) {
      for (Vertex w : d.out_neighbors(v)) ending[w] = std::max(ending[w], ending[v] + 1);
      best = std::max(best, ending[v]);
    }
    return {best, false};
  }
  std::vector<bool> on_path(d.num_vertices(), false);
  std::size_t best = 0;
  for (Vertex v = 0; v < d.num_vertices() && best < cap; ++v) {
    best = std::max(best, capped_dipath_from(d, v, 0, cap, on_path));
  }
  if (best >= cap) return {cap, true};
  return {best, false};
}

bool is_ditree(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  if (n == 0 || d.num_edges() != n - 1) return false;
  // With n-1 edges, connected is equivalent to every vertex reachable from 0.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (auto list : {d.out_neighbors(v), d.in_neighbors(v)}) {
      for (Vertex w : list) {
        if (seen[w]) continue;
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

ClassReport classify(const Digraph& d, std::size_t cap) {
  ClassReport report;
  report.n = d.num_vertices();
  report.m = d.num_edges();
  report.strongly_simple = true;  // guaranteed by Digraph's invariants
  report.bipartition = bipartition(d);
  report.acyclic = topological_order(d).has_value();
  report.longest_dipath = longest_dipath(d, cap);
  for (Vertex v = 0; v < report.n; ++v) {
    if (d.is_source(v)) report.sources.push_back(v);
    if (d.is_sink(v)) report.sinks.push_back(v);
  }
  report.components = component_vertex_sets(d);
  report.is_ditree = report.n >= 1 && report.m == report.n - 1 && report.components.size() == 1;
  return report;
}

}  // namespace dilabel
