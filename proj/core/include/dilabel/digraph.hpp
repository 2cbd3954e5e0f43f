#ifndef DILABEL_DIGRAPH_HPP
#define DILABEL_DIGRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dilabel {

using Vertex = std::uint32_t;

/// Directed edge `from -> to`.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  Syntax,
  Loop,
  DuplicateEdge,
  AntiParallel,
  VertexOutOfRange,
};

std::string_view to_string(GraphErrorKind kind);

/// Raised when an edge set (or edge-list text) does not describe a strongly
/// simple digraph. `line`/`column` are 1-based and 0 when not from text.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what, std::size_t line = 0,
             std::size_t column = 0);

  GraphErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Strongly simple digraph on the dense vertex ids 0..n-1: no loops, no
/// duplicate edges, and never both u->v and v->u. Immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Edgeless digraph on n vertices.
  explicit Digraph(std::size_t n);

  /// Throws GraphError if the edges break strong simplicity or reference a
  /// vertex >= n.
  Digraph(std::size_t n, std::span<const Edge> edges);
  Digraph(std::size_t n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const noexcept {
    return out_offsets_.empty() ? 0 : out_offsets_.size() - 1;
  }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges in lexicographic (from, to) order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_degree(v)};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_degree(v)};
  }

  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  std::size_t degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  bool has_edge(Vertex from, Vertex to) const;
  /// True when the two vertices are joined in either direction.
  bool adjacent(Vertex a, Vertex b) const {
    return has_edge(a, b) || has_edge(b, a);
  }

  bool is_source(Vertex v) const { return in_degree(v) == 0; }
  bool is_sink(Vertex v) const { return out_degree(v) == 0; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  // Adjacency in compressed form: the out-neighbours of v are
  // out_targets_[out_offsets_[v] .. out_offsets_[v+1]), likewise for in.
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
};

/// Parses the edge-list format: `#` comment lines, a header `n m`, then
/// exactly m lines `u v`.
Digraph parse_digraph(std::string_view text);

/// Reads a file and parses it with parse_digraph.
Digraph read_digraph_file(const std::string& path);

/// Serializes to the edge-list format accepted by parse_digraph.
std::string to_edge_list(const Digraph& d);

/// Disjoint union; vertices of `b` are shifted by a.num_vertices().
Digraph disjoint_union(const Digraph& a, const Digraph& b);

/// Subdigraph induced by `vertices` (sorted ascending, distinct). Vertex i of
/// the result is vertices[i].
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

/// A weakly connected component with its map back to the parent's ids.
struct Component {
  Digraph graph;
  std::vector<Vertex> to_original;
};

/// Weakly connected components ordered by smallest original id.
std::vector<Component> components(const Digraph& d);
/// Vertex sets of the same components, without building subdigraphs.
std::vector<std::vector<Vertex>> component_vertex_sets(const Digraph& d);

struct DistancePairs {
  std::vector<Edge> at_one;  ///< ordered (x,y) with d(x,y) = 1
  std::vector<Edge> at_two;  ///< ordered (x,y) with d(x,y) = 2
};

/// Ordered vertex pairs at directed distance exactly 1 and exactly 2, each
/// list sorted.
DistancePairs distance_pairs(const Digraph& d);

// ---------------------------------------------------------------------------
// Structural analysis

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  /// side[v] is 0 for v in a, 1 for v in b.
  std::vector<std::uint8_t> side;
};

/// Longest simple dipath length (in edges). When `at_least` is set the true
/// value is >= `length` and was not resolved further.
struct LongestDipath {
  std::size_t length = 0;
  bool at_least = false;

  bool is(std::size_t l) const { return !at_least && length == l; }
  bool at_least_value(std::size_t l) const { return length >= l; }
  friend bool operator==(const LongestDipath&, const LongestDipath&) = default;
};

struct ClassReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool strongly_simple = true;
  std::optional<Bipartition> bipartition;
  bool acyclic = true;
  LongestDipath longest_dipath;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  bool is_ditree = false;
  std::vector<std::vector<Vertex>> components;

  bool bipartite() const { return bipartition.has_value(); }
};

inline constexpr std::size_t kDefaultDipathCap = 5;

/// Structural facts gating the closed-form spans. The longest dipath is
/// exact for acyclic inputs; for cyclic inputs it is exact below `cap` and
/// reported as "at least cap" otherwise.
ClassReport classify(const Digraph& d, std::size_t cap = kDefaultDipathCap);

/// Longest dipath only (same rules as classify).
LongestDipath longest_dipath(const Digraph& d, std::size_t cap = kDefaultDipathCap);

/// Proper 2-colouring of the underlying graph, if one exists.
std::optional<Bipartition> bipartition(const Digraph& d);

/// Topological order, or nullopt if the digraph has a dicycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& d);

/// Orientation of a tree: connected, n >= 1 and m = n - 1.
bool is_ditree(const Digraph& d);

}  // namespace dilabel

#endif  // DILABEL_DIGRAPH_HPP
