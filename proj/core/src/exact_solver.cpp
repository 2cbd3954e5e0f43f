#include "dilabel/exact_solver.hpp"

#include <algorithm>
#include <numeric>

namespace dilabel {

namespace {

struct Constraint {
  std::size_t position;  // earlier position in the search order
  Label separation;
};

// Backtracking over a fixed vertex order; each vertex only checks the
// constraints against vertices placed before it.
class SpanSearch {
 public:
  SpanSearch(const Digraph& d, Separation sep) : n_(d.num_vertices()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return d.degree(a) > d.degree(b);
    });
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[order_[i]] = i;

    // Pairwise requirement: j at distance 1 in either direction, else k at
    // distance 2 in either direction.
    std::vector<std::vector<Label>> required(n_, std::vector<Label>(n_, 0));
    const auto pairs = distance_pairs(d);
    for (const Edge& e : pairs.at_two) {
      required[e.from][e.to] = std::max<Label>(required[e.from][e.to], sep.k());
      required[e.to][e.from] = required[e.from][e.to];
    }
    for (const Edge& e : pairs.at_one) {
      required[e.from][e.to] = sep.j();
      required[e.to][e.from] = sep.j();
    }
    before_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t p = 0; p < i; ++p) {
        Label r = required[order_[i]][order_[p]];
        if (r > 0) before_[i].push_back({p, r});
      }
    }
  }

  // Labels indexed by vertex, or nullopt.
  std::optional<std::vector<Label>> run(Label span, std::uint64_t max_nodes,
                                        std::uint64_t& nodes, bool& exhausted) {
    span_ = span;
    max_nodes_ = max_nodes;
    nodes_ = &nodes;
    exhausted_ = false;
    assigned_.assign(n_, 0);
    bool found = place(0);
    exhausted = exhausted_;
    if (!found) return std::nullopt;
    std::vector<Label> labels(n_);
    for (std::size_t i = 0; i < n_; ++i) labels[order_[i]] = assigned_[i];
    return labels;
  }

 private:
  bool compatible(std::size_t i, Label c) const {
    for (const Constraint& con : before_[i]) {
      Label other = assigned_[con.position];
      Label diff = c > other ? c - other : other - c;
      if (diff < con.separation) return false;
    }
    return true;
  }

  bool place(std::size_t i) {
    if (i == n_) return true;
    // Reflection f -> span - f preserves validity, so the first vertex can
    // stay in the lower half.
    const Label top = i == 0 ? span_ / 2 : span_;
    for (Label c = 0; c <= top; ++c) {
      if (++*nodes_ > max_nodes_) {
        exhausted_ = true;
        return false;
      }
      if (!compatible(i, c)) continue;
      assigned_[i] = c;
      if (place(i + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Constraint>> before_;
  std::vector<Label> assigned_;
  Label span_ = 0;
  std::uint64_t max_nodes_ = 0;
  std::uint64_t* nodes_ = nullptr;
  bool exhausted_ = false;
};

Labeling trivial_labeling(std::size_t n, Separation sep) {
  std::vector<Label> values(n);
  for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<Label>(v * sep.j());
  return Labeling(std::move(values), sep);
}

}  // namespace

std::string to_string(const Method& m) {
  switch (m.kind) {
    case MethodKind::Formula: return "formula: " + m.formula;
    case MethodKind::Dp: return "dp";
    case MethodKind::Oracle: return "oracle";
    case MethodKind::OraclePartial: return "oracle-partial";
  }
  return "unknown";
}

std::optional<Labeling> find_labeling_within(const Digraph& d, Separation sep, Label span,
                                             std::uint64_t max_nodes, std::uint64_t& nodes,
                                             bool& exhausted) {
  SpanSearch search(d, sep);
  auto labels = search.run(span, max_nodes, nodes, exhausted);
  if (!labels) return std::nullopt;
  return Labeling(std::move(*labels), sep);
}

LambdaResult exact_lambda(const Digraph& d, Separation sep, const SolverLimits& limits) {
  const std::size_t n = d.num_vertices();
  if (n > limits.max_n && !limits.ignore_max_n) {
    throw PreconditionError("exact solver limited to " + std::to_string(limits.max_n) +
                            " vertices (digraph has " + std::to_string(n) + ")");
  }
  if (d.num_edges() == 0) {
    return {0, 0, Method::oracle(), Labeling(std::vector<Label>(n, 0), sep)};
  }

  const Label upper = static_cast<Label>(sep.j() * (n - 1));
  SpanSearch search(d, sep);
  std::uint64_t nodes = 0;
  for (Label span = sep.j(); span <= upper; ++span) {
    bool exhausted = false;
    auto labels = search.run(span, limits.max_nodes, nodes, exhausted);
    if (labels) {
      Labeling witness = normalize(Labeling(std::move(*labels), sep));
      return {span, span, Method::oracle(), std::move(witness)};
    }
    if (exhausted) {
      return {span, upper, Method::oracle_partial(), trivial_labeling(n, sep)};
    }
  }
  // Unreachable: span j(n-1) is always feasible.
  return {upper, upper, Method::oracle(), trivial_labeling(n, sep)};
}

LambdaResult exact_lambda_components(const Digraph& d, Separation sep,
                                     const SolverLimits& limits) {
  LambdaResult combined{0, 0, Method::oracle(), std::nullopt};
  std::vector<Label> values(d.num_vertices(), 0);
  for (const Component& comp : components(d)) {
    LambdaResult part = exact_lambda(comp.graph, sep, limits);
    combined.lo = std::max(combined.lo, part.lo);
    combined.hi = std::max(combined.hi, part.hi);
    if (part.method.kind == MethodKind::OraclePartial) combined.method = Method::oracle_partial();
    const Labeling local = normalize(*part.witness);
    for (std::size_t i = 0; i < comp.to_original.size(); ++i) {
      values[comp.to_original[i]] = local[static_cast<Vertex>(i)];
    }
  }
  combined.witness = Labeling(std::move(values), sep);
  return combined;
}

}  // namespace dilabel
