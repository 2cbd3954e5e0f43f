#include "dilabel/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace dilabel {

namespace {

std::uint64_t edge_key(Vertex from, Vertex to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

std::string edge_text(Vertex u, Vertex v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

// Incremental strong-simplicity check shared by the parser and the
// constructor, so both report the first offending edge.
class EdgeChecker {
 public:
  explicit EdgeChecker(std::size_t n) : n_(n) {}

  void add(Vertex u, Vertex v, std::size_t line = 0, std::size_t column = 0) {
    if (u >= n_ || v >= n_) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "vertex id out of range in edge " + edge_text(u, v) +
                           " (n = " + std::to_string(n_) + ")",
                       line, column);
    }
    if (u == v) {
      throw GraphError(GraphErrorKind::Loop, "loop at vertex " + std::to_string(u),
                       line, column);
    }
    if (seen_.contains(edge_key(u, v))) {
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       "duplicate edge " + edge_text(u, v), line, column);
    }
    if (seen_.contains(edge_key(v, u))) {
      throw GraphError(GraphErrorKind::AntiParallel,
                       "anti-parallel pair " + edge_text(u, v) + " and " +
                           edge_text(v, u),
                       line, column);
    }
    seen_.insert(edge_key(u, v));
  }

 private:
  std::size_t n_;
  std::unordered_set<std::uint64_t> seen_;
};

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::uint64_t parse_number(const Token& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw GraphError(GraphErrorKind::Syntax,
                     "expected a non-negative integer, got '" + std::string(tok.text) + "'",
                     line_no, tok.column);
  }
  return value;
}

}  // namespace

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::Syntax: return "syntax";
    case GraphErrorKind::Loop: return "loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate-edge";
    case GraphErrorKind::AntiParallel: return "anti-parallel";
    case GraphErrorKind::VertexOutOfRange: return "vertex-out-of-range";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrorKind kind, const std::string& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

Digraph::Digraph(std::size_t n) : out_offsets_(n + 1, 0), in_offsets_(n + 1, 0) {}

Digraph::Digraph(std::size_t n, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()), out_offsets_(n + 1, 0), in_offsets_(n + 1, 0) {
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "vertex id out of range in edge " + edge_text(e.from, e.to) +
                           " (n = " + std::to_string(n) + ")");
    }
    if (e.from == e.to) {
      throw GraphError(GraphErrorKind::Loop, "loop at vertex " + std::to_string(e.from));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + edge_text(dup->from, dup->to));
  }

  // Edges are sorted by tail, so out-lists come out sorted, and filling the
  // in-lists in the same order sorts them by tail as well.
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  std::vector<std::size_t> next_in(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].to;
    in_sources_[next_in[edges_[i].to]++] = edges_[i].from;
  }

  for (const Edge& e : edges_) {
    if (e.from > e.to && has_edge(e.to, e.from)) {
      throw GraphError(GraphErrorKind::AntiParallel, "anti-parallel pair " +
                                                         edge_text(e.to, e.from) + " and " +
                                                         edge_text(e.from, e.to));
    }
  }
}

bool Digraph::has_edge(Vertex from, Vertex to) const {
  if (from >= num_vertices()) return false;
  const auto list = out_neighbors(from);
  return std::binary_search(list.begin(), list.end(), to);
}

Digraph parse_digraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::optional<EdgeChecker> checker;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (tokens.size() != 2) {
      throw GraphError(GraphErrorKind::Syntax,
                       "expected two integers, found " + std::to_string(tokens.size()) +
                           " tokens",
                       line_no, tokens.front().column);
    }
    if (!have_header) {
      n = parse_number(tokens[0], line_no);
      m = parse_number(tokens[1], line_no);
      if (n > std::numeric_limits<Vertex>::max()) {
        throw GraphError(GraphErrorKind::Syntax, "vertex count too large", line_no,
                         tokens[0].column);
      }
      have_header = true;
      checker.emplace(n);
      edges.reserve(std::min<std::size_t>(m, std::size_t{1} << 20));
      continue;
    }
    if (edges.size() == m) {
      throw GraphError(GraphErrorKind::Syntax,
                       "more edge lines than the declared " + std::to_string(m), line_no,
                       tokens.front().column);
    }
    std::uint64_t u = parse_number(tokens[0], line_no);
    std::uint64_t v = parse_number(tokens[1], line_no);
    if (u >= n || v >= n) {
      const Token& bad = u >= n ? tokens[0] : tokens[1];
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "vertex id " + std::string(bad.text) + " >= n = " + std::to_string(n),
                       line_no, bad.column);
    }
    checker->add(static_cast<Vertex>(u), static_cast<Vertex>(v), line_no, tokens[0].column);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }

  if (!have_header) {
    throw GraphError(GraphErrorKind::Syntax, "missing header line 'n m'", line_no + 1, 1);
  }
  if (edges.size() != m) {
    throw GraphError(GraphErrorKind::Syntax,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(edges.size()),
                     line_no + 1, 1);
  }
  return Digraph(n, edges);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.num_vertices() << ' ' << d.num_edges() << '\n';
  for (const Edge& e : d.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({e.from + shift, e.to + shift});
  return Digraph(a.num_vertices() + b.num_vertices(), edges);
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(d.num_vertices(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex v : vertices) {
    for (Vertex w : d.out_neighbors(v)) {
      if (local[w] != static_cast<Vertex>(-1)) edges.push_back({local[v], local[w]});
    }
  }
  return Digraph(vertices.size(), edges);
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto list : {d.out_neighbors(v), d.in_neighbors(v)}) {
        for (Vertex w : list) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

std::vector<Component> components(const Digraph& d) {
  std::vector<Component> result;
  for (auto& members : component_vertex_sets(d)) {
    Digraph sub = induced_subdigraph(d, members);
    result.push_back({std::move(sub), std::move(members)});
  }
  return result;
}

DistancePairs distance_pairs(const Digraph& d) {
  DistancePairs pairs;
  const std::size_t n = d.num_vertices();
  std::vector<Vertex> mark(n, static_cast<Vertex>(-1));
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : d.out_neighbors(x)) {
      pairs.at_one.push_back({x, y});
      mark[y] = x;
    }
    mark[x] = x;
    std::vector<Vertex> two;
    for (Vertex y : d.out_neighbors(x)) {
      for (Vertex z : d.out_neighbors(y)) {
        if (mark[z] != x) {
          mark[z] = x;
          two.push_back(z);
        }
      }
    }
    std::sort(two.begin(), two.end());
    for (Vertex z : two) pairs.at_two.push_back({x, z});
  }
  return pairs;
}

}  // namespace dilabel
