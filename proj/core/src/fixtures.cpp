#include "dilabel/fixtures.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace dilabel::fixtures {

Digraph dipath(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Digraph(n, edges);
}

Digraph dicycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a dicycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Digraph(n, edges);
}

Digraph ditree_t1() { return dipath(4); }

Digraph ditree_t2() {
  return Digraph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 3}, {4, 5}, {5, 6}, {6, 7}});
}

std::optional<Digraph> by_name(std::string_view name) {
  if (name == "T1") return ditree_t1();
  if (name == "T2") return ditree_t2();
  if (name.size() < 2 || (name[0] != 'P' && name[0] != 'C')) return std::nullopt;
  std::size_t n = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (name[0] == 'P') return n >= 1 ? std::optional(dipath(n)) : std::nullopt;
  return n >= 3 ? std::optional(dicycle(n)) : std::nullopt;
}

}  // namespace dilabel::fixtures
