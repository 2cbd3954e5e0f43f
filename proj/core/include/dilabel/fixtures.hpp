#ifndef DILABEL_FIXTURES_HPP
#define DILABEL_FIXTURES_HPP

#include <optional>
#include <string_view>

#include "dilabel/digraph.hpp"

namespace dilabel::fixtures {

/// Dipath on n vertices: 0 -> 1 -> ... -> n-1.
Digraph dipath(std::size_t n);

/// Dicycle on n >= 3 vertices: 0 -> 1 -> ... -> n-1 -> 0.
Digraph dicycle(std::size_t n);

/// The 4-vertex dipath, a ditree with span j+1 under L(j,1).
Digraph ditree_t1();

/// Eight-vertex ditree with longest dipath 3 whose L(j,1) number is j+2.
/// Vertex i here is v_{i+1} in the usual drawing:
/// v1->v2->v3->v4 <- v5 -> v6 -> v7 -> v8.
Digraph ditree_t2();

/// Resolves fixture names "P<n>", "C<n>", "T1", "T2" (case-sensitive).
std::optional<Digraph> by_name(std::string_view name);

}  // namespace dilabel::fixtures

#endif  // DILABEL_FIXTURES_HPP
