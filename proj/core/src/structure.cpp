#include "dilabel/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dilabel {

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw PreconditionError(what);
}

bool is_connected(const Digraph& d) { return components(d).size() <= 1; }

bool valid_bipartition(const Digraph& d, const Bipartition& part) {
  if (part.side.size() != d.num_vertices()) return false;
  return std::all_of(d.edges().begin(), d.edges().end(), [&](const Edge& e) {
    return part.side[e.from] != part.side[e.to];
  });
}

// Labels successive vertices of a dicycle, starting from vertex 0.
Labeling label_around_cycle(const Digraph& d, std::span<const Label> cycle_labels,
                            Separation sep) {
  std::vector<Label> values(d.num_vertices(), 0);
  Vertex v = 0;
  for (Label value : cycle_labels) {
    values[v] = value;
    v = d.out_neighbors(v).front();
  }
  return Labeling(std::move(values), sep);
}

struct ComponentValue {
  Label lo;
  Label hi;
  std::string_view name;
  Labeling witness;
};

ComponentValue component_value(const ComponentCase& cc, Separation sep) {
  const Label j = sep.j();
  const Label k = sep.k();
  const Digraph& g = cc.component.graph;
  switch (cc.tag.kind) {
    case Case::NoEdge:
      return {0, 0, "no-edge", Labeling(std::vector<Label>(g.num_vertices(), 0), sep)};
    case Case::L1:
      return {j, j, "l1", label_l1(g, sep)};
    case Case::L2Bipartite:
      return {j + k, j + k, "l2-bipartite", label_l2_bipartite(g, sep, *cc.tag.bipartition)};
    case Case::L2NonBipartite:
      return {2 * j, 2 * j, "l2-nonbipartite", label_l2_nonbipartite(g, sep)};
    case Case::L3Bipartite:
      return {j + k, j + 2 * k, "l3-bipartite", label_l3_bipartite(g, sep, *cc.tag.bipartition)};
    case Case::DitreeGeneral: {
      const Label v = std::min(2 * j, j + 2 * k);
      return {v, v, "ditree-dipath4", label_ditree_via_cycle(g, sep)};
    }
    case Case::Unclassified:
      break;
  }
  throw std::logic_error("component_value called on an unclassified component");
}

}  // namespace

std::string_view to_string(Case c) {
  switch (c) {
    case Case::NoEdge: return "no-edge";
    case Case::L1: return "l1";
    case Case::L2Bipartite: return "l2-bipartite";
    case Case::L2NonBipartite: return "l2-nonbipartite";
    case Case::L3Bipartite: return "l3-bipartite";
    case Case::DitreeGeneral: return "ditree-dipath4";
    case Case::Unclassified: return "unclassified";
  }
  return "unknown";
}

CaseTag classify_case(const ClassReport& report) {
  CaseTag tag;
  tag.bipartition = report.bipartition;
  tag.sources = report.sources;
  const LongestDipath& ell = report.longest_dipath;
  if (report.m == 0) {
    tag.kind = Case::NoEdge;
  } else if (ell.is(1)) {
    tag.kind = Case::L1;
  } else if (ell.is(2)) {
    tag.kind = report.bipartite() ? Case::L2Bipartite : Case::L2NonBipartite;
  } else if (ell.is(3)) {
    tag.kind = report.bipartite() ? Case::L3Bipartite : Case::Unclassified;
  } else {
    tag.kind = report.is_ditree ? Case::DitreeGeneral : Case::Unclassified;
  }
  return tag;
}

std::vector<ComponentCase> classify_components(const Digraph& d) {
  std::vector<ComponentCase> result;
  for (Component& comp : components(d)) {
    ClassReport report = classify(comp.graph);
    CaseTag tag = classify_case(report);
    result.push_back({std::move(comp), std::move(report), std::move(tag)});
  }
  return result;
}

Labeling label_l1(const Digraph& d, Separation sep) {
  require(d.num_edges() >= 1, "label_l1: digraph has no edge");
  std::vector<Label> values(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    require(d.is_source(v) || d.is_sink(v),
            "label_l1: some vertex is neither a source nor a sink");
    values[v] = d.is_source(v) ? 0 : sep.j();
  }
  return Labeling(std::move(values), sep);
}

Labeling label_l2_bipartite(const Digraph& d, Separation sep, const Bipartition& part) {
  require(valid_bipartition(d, part), "label_l2_bipartite: not a bipartition of the digraph");
  require(longest_dipath(d).is(2), "label_l2_bipartite: longest dipath is not 2");
  const Label j = sep.j();
  const Label k = sep.k();
  std::vector<Label> values(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const bool source = d.is_source(v);
    if (part.side[v] == 0) {
      values[v] = source ? k : 0;
    } else {
      values[v] = source ? j : j + k;
    }
  }
  return Labeling(std::move(values), sep);
}

Labeling label_l2_nonbipartite(const Digraph& d, Separation sep) {
  require(is_connected(d), "label_l2_nonbipartite: digraph is not connected");
  require(!bipartition(d), "label_l2_nonbipartite: digraph is bipartite");
  require(longest_dipath(d).is(2), "label_l2_nonbipartite: longest dipath is not 2");
  const Label j = sep.j();
  if (!topological_order(d)) {
    // Connected, cyclic, longest dipath 2: the digraph is C3.
    const Label labels[] = {0, j, 2 * j};
    return label_around_cycle(d, labels, sep);
  }
  std::vector<Label> values(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (d.is_source(v)) {
      values[v] = 0;
    } else if (d.is_sink(v)) {
      values[v] = 2 * j;
    } else {
      values[v] = j;
    }
  }
  return Labeling(std::move(values), sep);
}

Labeling c4_labeling(Separation sep) {
  const Label j = sep.j();
  const Label k = sep.k();
  return Labeling({0, j + k, k, j + 2 * k}, sep);
}

Labeling label_l3_bipartite(const Digraph& d, Separation sep, const Bipartition& part) {
  require(is_connected(d), "label_l3_bipartite: digraph is not connected");
  require(valid_bipartition(d, part), "label_l3_bipartite: not a bipartition of the digraph");
  require(longest_dipath(d).is(3), "label_l3_bipartite: longest dipath is not 3");
  if (!topological_order(d)) {
    // Connected, bipartite, cyclic, longest dipath 3: the digraph is C4.
    const Labeling c4 = c4_labeling(sep);
    return label_around_cycle(d, c4.values(), sep);
  }
  const Label j = sep.j();
  const Label k = sep.k();
  std::vector<Label> values(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const auto preds = d.in_neighbors(v);
    const bool in_s = std::all_of(preds.begin(), preds.end(),
                                  [&](Vertex u) { return d.is_source(u); });
    if (part.side[v] == 0) {
      values[v] = in_s ? k : 0;
    } else {
      values[v] = in_s ? j + k : j + 2 * k;
    }
  }
  return Labeling(std::move(values), sep);
}

std::vector<Vertex> ditree_homomorphism(const Digraph& tree, std::size_t cycle_length) {
  require(cycle_length >= 3, "ditree_homomorphism: cycle length must be at least 3");
  require(is_ditree(tree), "ditree_homomorphism: input is not a ditree");
  const auto len = static_cast<Vertex>(cycle_length);
  std::vector<Vertex> h(tree.num_vertices(), 0);
  std::vector<bool> seen(tree.num_vertices(), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : tree.out_neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      h[w] = (h[v] + 1) % len;
      queue.push_back(w);
    }
    for (Vertex u : tree.in_neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      h[u] = (h[v] + len - 1) % len;
      queue.push_back(u);
    }
  }
  return h;
}

Labeling label_ditree_via_cycle(const Digraph& tree, Separation sep) {
  const Label j = sep.j();
  const Label k = sep.k();
  std::vector<Label> cycle_labels;
  if (2 * j <= j + 2 * k) {
    cycle_labels = {0, j, 2 * j};
  } else {
    const Labeling c4 = c4_labeling(sep);
    cycle_labels.assign(c4.values().begin(), c4.values().end());
  }
  const auto h = ditree_homomorphism(tree, cycle_labels.size());
  std::vector<Label> values(tree.num_vertices());
  for (Vertex v = 0; v < tree.num_vertices(); ++v) values[v] = cycle_labels[h[v]];
  return normalize(Labeling(std::move(values), sep));
}

std::optional<LambdaResult> lambda_by_formula(const Digraph& d, Separation sep) {
  return lambda_by_formula(d, classify_components(d), sep);
}

std::optional<LambdaResult> lambda_by_formula(const Digraph& d,
                                              const std::vector<ComponentCase>& cases,
                                              Separation sep) {
  if (std::any_of(cases.begin(), cases.end(),
                  [](const ComponentCase& cc) { return cc.tag.kind == Case::Unclassified; })) {
    return std::nullopt;
  }
  Label lo = 0;
  Label hi = 0;
  std::string_view name = "no-edge";
  std::vector<Label> values(d.num_vertices(), 0);
  for (const ComponentCase& cc : cases) {
    ComponentValue part = component_value(cc, sep);
    if (part.hi > hi) name = part.name;
    lo = std::max(lo, part.lo);
    hi = std::max(hi, part.hi);
    const Labeling local = normalize(part.witness);
    for (std::size_t i = 0; i < cc.component.to_original.size(); ++i) {
      values[cc.component.to_original[i]] = local[static_cast<Vertex>(i)];
    }
  }
  Labeling witness(std::move(values), sep);
  if (witness.span() < lo) {
    throw std::logic_error("constructed labeling beats a proven lower bound");
  }
  hi = std::min(hi, witness.span());
  return LambdaResult{lo, hi, Method::from_formula(std::string(name)), std::move(witness)};
}

}  // namespace dilabel
