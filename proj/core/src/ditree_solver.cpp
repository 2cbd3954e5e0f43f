#include "dilabel/ditree_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "dilabel/structure.hpp"

namespace dilabel {

namespace {

constexpr Symbol kZero = 0;
constexpr Symbol kOne = 1;
constexpr Symbol kJ = 2;
constexpr Symbol kJPlusOne = 3;

void require_dp_j(unsigned j) {
  if (j < 2) {
    throw PreconditionError("the span-(j+1) decision procedure needs j >= 2 (got j=" +
                            std::to_string(j) + ")");
  }
}

Symbol lowest(SymbolSet set) { return static_cast<Symbol>(std::countr_zero(set)); }

// Leaf with the smallest id.
Vertex lowest_leaf(const Digraph& tree) {
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    if (tree.degree(v) == 1) return v;
  }
  throw PreconditionError("ditree has no leaf");
}

// Breadth-first layout of a ditree from `root`; the input is not checked.
RootedDitree root_at(const Digraph& tree, Vertex root) {
  const std::size_t n = tree.num_vertices();

  RootedDitree rooted;
  rooted.root = root;
  rooted.order.reserve(n);
  rooted.position.assign(n, 0);
  rooted.parent_pos.assign(n, 0);
  rooted.up.assign(n, false);
  rooted.child_begin.assign(n, 0);
  rooted.out_count.assign(n, 0);
  rooted.in_count.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  rooted.order.push_back(root);
  for (std::uint32_t x = 0; x < rooted.order.size(); ++x) {
    const Vertex v = rooted.order[x];
    rooted.child_begin[x] = static_cast<std::uint32_t>(rooted.order.size());
    auto attach = [&](Vertex c, bool up) {
      const auto pos = static_cast<std::uint32_t>(rooted.order.size());
      seen[c] = true;
      rooted.position[c] = pos;
      rooted.parent_pos[pos] = x;
      rooted.up[pos] = up;
      rooted.order.push_back(c);
    };
    for (Vertex w : tree.out_neighbors(v)) {
      if (seen[w]) continue;
      attach(w, false);
      ++rooted.out_count[x];
    }
    for (Vertex u : tree.in_neighbors(v)) {
      if (seen[u]) continue;
      attach(u, true);
      ++rooted.in_count[x];
    }
  }
  return rooted;
}

// S sets indexed by position in rooted.order, computed bottom-up.
std::vector<SubtreeSets> sets_by_position(const RootedDitree& rooted, const AdmissiblePairs& w) {
  const std::size_t n = rooted.size();
  std::vector<SubtreeSets> sets(n);
  for (std::size_t x = n; x-- > 0;) {
    const std::uint32_t first = rooted.child_begin[x];
    const std::uint32_t mid = first + rooted.out_count[x];  // in-children start
    const std::uint32_t last = mid + rooted.in_count[x];
    PairSet plus;
    PairSet minus;
    for (std::size_t p = 0; p < kPairs; ++p) {
      const Symbol a = w.first(p);
      const Symbol b = w.second(p);

      // (a,b) on v -> v+: each in-child u sees u -> v -> v+ and must avoid a;
      // each out-child must avoid the in-children's forced label.
      bool keep = true;
      SymbolSet forced = 0;
      for (std::uint32_t c = mid; c < last && keep; ++c) {
        const SymbolSet options = w.seconds_after_except(sets[c].plus, b, a);
        if (options == 0) keep = false;
        if (c == mid) forced = options;
      }
      for (std::uint32_t c = first; c < mid && keep; ++c) {
        const SymbolSet options = w.seconds_after(sets[c].minus, b);
        if (options == 0 || options == forced) keep = false;
      }
      if (keep) plus = plus.with(p);

      // (a,b) on v- -> v: mirror image with in/out children exchanged.
      keep = true;
      forced = 0;
      for (std::uint32_t c = first; c < mid && keep; ++c) {
        const SymbolSet options = w.seconds_after_except(sets[c].minus, b, a);
        if (options == 0) keep = false;
        if (c == first) forced = options;
      }
      for (std::uint32_t c = mid; c < last && keep; ++c) {
        const SymbolSet options = w.seconds_after(sets[c].plus, b);
        if (options == 0 || options == forced) keep = false;
      }
      if (keep) minus = minus.with(p);
    }
    sets[x] = {plus, minus};
  }
  return sets;
}

struct Decision {
  RootedDitree rooted;          // rooted at the leaf, so the anchor is position 1
  std::vector<SubtreeSets> sets;  // by position
  bool leaf_is_head;            // edge anchor -> leaf
  PairSet answer;
};

void require_decidable(const Digraph& tree) {
  if (!is_ditree(tree) || tree.num_vertices() < 2) {
    throw PreconditionError("decision procedure needs a ditree with at least two vertices");
  }
}

// Expects a ditree with at least two vertices.
Decision run_decision(const Digraph& tree, const AdmissiblePairs& w) {
  Decision dec;
  // Rooting the whole tree at the lowest-id leaf makes the subtree of its
  // only neighbour (the anchor) exactly T - leaf.
  dec.rooted = root_at(tree, lowest_leaf(tree));
  dec.sets = sets_by_position(dec.rooted, w);
  dec.leaf_is_head = dec.rooted.in_count[0] == 1;
  dec.answer = dec.leaf_is_head ? dec.sets[1].plus : dec.sets[1].minus;
  return dec;
}

// Labels every vertex top-down from the decision's surviving pair, or
// nullopt when the answer set is empty.
std::optional<Labeling> reconstruct(const Decision& dec, const AdmissiblePairs& w) {
  if (dec.answer.empty()) return std::nullopt;
  const RootedDitree& rooted = dec.rooted;
  const std::size_t n = rooted.size();
  std::vector<Symbol> sym(n, 0);  // by position

  const auto first_pair = static_cast<std::size_t>(std::countr_zero(dec.answer.bits()));
  sym[0] = w.first(first_pair);
  sym[1] = w.second(first_pair);

  auto fail = [] { throw std::logic_error("span-(j+1) reconstruction hit an empty choice"); };

  // Top-down: a vertex's own pair (parent label, own label) is already in
  // its set; choose child labels consistent with that pair.
  for (std::uint32_t x = 1; x < n; ++x) {
    const Symbol a = sym[rooted.parent_pos[x]];
    const Symbol b = sym[x];
    const std::uint32_t first = rooted.child_begin[x];
    const std::uint32_t mid = first + rooted.out_count[x];
    const std::uint32_t last = mid + rooted.in_count[x];
    SymbolSet used = 0;
    if (rooted.up[x]) {
      // x -> parent: in-children avoid a, out-children avoid in-children.
      for (std::uint32_t c = mid; c < last; ++c) {
        const SymbolSet options = w.seconds_after_except(dec.sets[c].plus, b, a);
        if (options == 0) fail();
        sym[c] = lowest(options);
        used = static_cast<SymbolSet>(used | (1u << sym[c]));
      }
      for (std::uint32_t c = first; c < mid; ++c) {
        const SymbolSet options =
            static_cast<SymbolSet>(w.seconds_after(dec.sets[c].minus, b) & ~used);
        if (options == 0) fail();
        sym[c] = lowest(options);
      }
    } else {
      // parent -> x: out-children avoid a, in-children avoid out-children.
      for (std::uint32_t c = first; c < mid; ++c) {
        const SymbolSet options = w.seconds_after_except(dec.sets[c].minus, b, a);
        if (options == 0) fail();
        sym[c] = lowest(options);
        used = static_cast<SymbolSet>(used | (1u << sym[c]));
      }
      for (std::uint32_t c = mid; c < last; ++c) {
        const SymbolSet options =
            static_cast<SymbolSet>(w.seconds_after(dec.sets[c].plus, b) & ~used);
        if (options == 0) fail();
        sym[c] = lowest(options);
      }
    }
  }

  std::vector<Label> values(n);
  for (std::uint32_t x = 0; x < n; ++x) values[rooted.order[x]] = w.label(sym[x]);
  return normalize(Labeling(std::move(values), Separation(w.j(), 1)));
}

}  // namespace

AdmissiblePairs::AdmissiblePairs(unsigned j) : j_(j) {
  require_dp_j(j);
  labels_ = {0, 1, j, j + 1};
  pairs_ = {{{kZero, kJ},
             {kZero, kJPlusOne},
             {kOne, kJPlusOne},
             {kJ, kZero},
             {kJPlusOne, kZero},
             {kJPlusOne, kOne}}};
  for (std::size_t bits = 0; bits < seconds_.size(); ++bits) {
    for (std::size_t p = 0; p < kPairs; ++p) {
      if ((bits >> p) & 1u) {
        seconds_[bits][pairs_[p][0]] |= static_cast<SymbolSet>(1u << pairs_[p][1]);
      }
    }
  }
}

std::optional<Symbol> AdmissiblePairs::symbol(Label label) const {
  for (Symbol s = 0; s < kSymbols; ++s) {
    if (labels_[s] == label) return s;
  }
  return std::nullopt;
}

std::optional<std::size_t> AdmissiblePairs::index(Symbol a, Symbol b) const {
  for (std::size_t p = 0; p < kPairs; ++p) {
    if (pairs_[p][0] == a && pairs_[p][1] == b) return p;
  }
  return std::nullopt;
}

std::vector<Label> AdmissiblePairs::labels_of(SymbolSet set) const {
  std::vector<Label> out;
  for (Symbol s = 0; s < kSymbols; ++s) {
    if ((set >> s) & 1u) out.push_back(labels_[s]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedDitree build_rooted(const Digraph& tree, Vertex root) {
  if (!is_ditree(tree)) throw PreconditionError("build_rooted: input is not a ditree");
  if (root >= tree.num_vertices()) throw PreconditionError("build_rooted: root out of range");
  return root_at(tree, root);
}

std::vector<SubtreeSets> s_sets(const RootedDitree& rooted, unsigned j) {
  const AdmissiblePairs w(j);
  const auto by_position = sets_by_position(rooted, w);
  std::vector<SubtreeSets> sets(rooted.size());
  for (std::size_t x = 0; x < rooted.size(); ++x) sets[rooted.order[x]] = by_position[x];
  return sets;
}

bool decide_span_j_plus_1(const Digraph& tree, unsigned j) {
  const AdmissiblePairs w(j);
  require_decidable(tree);
  return !run_decision(tree, w).answer.empty();
}

std::optional<Labeling> span_j_plus_1_labeling(const Digraph& tree, unsigned j) {
  const AdmissiblePairs w(j);
  require_decidable(tree);
  return reconstruct(run_decision(tree, w), w);
}


LambdaResult ditree_lambda_j(const Digraph& tree, unsigned j) {
  if (!is_ditree(tree)) throw PreconditionError("ditree_lambda_j: input is not a ditree");
  const Separation sep(j, 1);
  const LongestDipath ell = longest_dipath(tree);

  auto exact = [](Label value, Method method, Labeling witness) {
    return LambdaResult{value, value, std::move(method), std::move(witness)};
  };

  switch (ell.length) {
    case 0:
      return exact(0, Method::from_formula("no-edge"), Labeling({0}, sep));
    case 1:
      return exact(j, Method::from_formula("l1"), label_l1(tree, sep));
    case 2:
      return exact(j + 1, Method::from_formula("l2-bipartite"),
                   label_l2_bipartite(tree, sep, *bipartition(tree)));
    case 3: {
      if (j == 1) {
        return exact(2, Method::from_formula("ditree-bound"), label_ditree_via_cycle(tree, sep));
      }
      // Longest dipath 3 means at least four vertices, so no further checks.
      const AdmissiblePairs pairs(j);
      if (auto witness = reconstruct(run_decision(tree, pairs), pairs)) {
        return exact(j + 1, Method::dp(), std::move(*witness));
      }
      return exact(j + 2, Method::dp(), label_ditree_via_cycle(tree, sep));
    }
    default:
      return exact(std::min(2 * j, j + 2), Method::from_formula("ditree-dipath4"),
                   label_ditree_via_cycle(tree, sep));
  }
}

}  // namespace dilabel
