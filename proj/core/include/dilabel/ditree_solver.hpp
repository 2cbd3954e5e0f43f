#ifndef DILABEL_DITREE_SOLVER_HPP
#define DILABEL_DITREE_SOLVER_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dilabel/digraph.hpp"
#include "dilabel/errors.hpp"
#include "dilabel/labeling.hpp"
#include "dilabel/lambda_result.hpp"

namespace dilabel {

// Span-(j+1) L(j,1)-labelings of a ditree (j >= 2) only ever use labels
// 0, 1, j, j+1, and an edge can only carry one of six ordered label pairs.
// The decision procedure tracks, for every rooted subtree T_v, which of those
// pairs can sit on a virtual edge v -> v+ (the "plus" set) or v- -> v (the
// "minus" set), written (label of the virtual vertex, label of v).

/// Index into the label alphabet {0, 1, j, j+1}.
using Symbol = std::uint8_t;
inline constexpr std::size_t kSymbols = 4;
inline constexpr std::size_t kPairs = 6;

/// Subset of the six admissible pairs as a bit mask in AdmissiblePairs order.
class PairSet {
 public:
  constexpr PairSet() = default;
  constexpr explicit PairSet(std::uint8_t bits) : bits_(bits & kAll) {}

  static constexpr PairSet all() { return PairSet(kAll); }

  constexpr bool contains(std::size_t pair) const { return (bits_ >> pair) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr PairSet with(std::size_t pair) const {
    return PairSet(static_cast<std::uint8_t>(bits_ | (1u << pair)));
  }
  constexpr bool subset_of(PairSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr bool operator==(PairSet, PairSet) = default;

 private:
  static constexpr std::uint8_t kAll = 0x3F;
  std::uint8_t bits_ = 0;
};

/// Set of symbols as a 4-bit mask.
using SymbolSet = std::uint8_t;

/// The six admissible pairs W = [(0,j), (0,j+1), (1,j+1), (j,0), (j+1,0),
/// (j+1,1)] and the lookup tables derived from them.
class AdmissiblePairs {
 public:
  /// Throws PreconditionError when j < 2.
  explicit AdmissiblePairs(unsigned j);

  unsigned j() const noexcept { return j_; }

  Label label(Symbol s) const { return labels_[s]; }
  /// Symbol for a label in {0, 1, j, j+1}; nullopt otherwise.
  std::optional<Symbol> symbol(Label label) const;

  Symbol first(std::size_t pair) const { return pairs_[pair][0]; }
  Symbol second(std::size_t pair) const { return pairs_[pair][1]; }
  /// Index of the pair (a, b), if admissible.
  std::optional<std::size_t> index(Symbol a, Symbol b) const;

  /// S_a: second components of pairs in `s` whose first component is a.
  SymbolSet seconds_after(PairSet s, Symbol a) const { return seconds_[s.bits()][a]; }
  /// S_(a,b): S_a without b.
  SymbolSet seconds_after_except(PairSet s, Symbol a, Symbol b) const {
    return static_cast<SymbolSet>(seconds_after(s, a) & ~(1u << b));
  }

  /// W_a and W_(a,b) for the full set.
  SymbolSet w_after(Symbol a) const { return seconds_after(PairSet::all(), a); }
  SymbolSet w_after_except(Symbol a, Symbol b) const {
    return seconds_after_except(PairSet::all(), a, b);
  }

  /// Labels in a symbol set, ascending.
  std::vector<Label> labels_of(SymbolSet set) const;

 private:
  unsigned j_;
  std::array<Label, kSymbols> labels_{};
  std::array<std::array<Symbol, 2>, kPairs> pairs_{};
  // seconds_[bits][a] = S_a for every subset of the pairs.
  std::array<std::array<SymbolSet, kSymbols>, 64> seconds_{};
};

/// A ditree hung from a root and laid out in breadth-first order. Children
/// of each vertex are split by edge direction: in-children u have the edge
/// u -> parent, out-children w have parent -> w. The per-node arrays are
/// indexed by position in `order`, so siblings sit next to each other.
struct RootedDitree {
  Vertex root = 0;
  std::vector<Vertex> order;              ///< position -> vertex, parents first
  std::vector<std::uint32_t> position;    ///< vertex -> position
  std::vector<std::uint32_t> parent_pos;  ///< the root's entry is 0
  std::vector<bool> up;                   ///< edge points from child to parent
  /// Children of order[p] occupy positions child_begin[p] onwards,
  /// out-children first.
  std::vector<std::uint32_t> child_begin;
  std::vector<std::uint32_t> out_count;
  std::vector<std::uint32_t> in_count;

  std::size_t size() const { return order.size(); }
  Vertex parent(Vertex v) const { return order[parent_pos[position[v]]]; }
  bool points_up(Vertex v) const { return up[position[v]]; }
  std::span<const Vertex> out_children(Vertex v) const {
    const auto p = position[v];
    return {order.data() + child_begin[p], out_count[p]};
  }
  std::span<const Vertex> in_children(Vertex v) const {
    const auto p = position[v];
    return {order.data() + child_begin[p] + out_count[p], in_count[p]};
  }
};

/// Throws PreconditionError if `tree` is not a ditree or root is out of range.
RootedDitree build_rooted(const Digraph& tree, Vertex root);

struct SubtreeSets {
  PairSet plus;   ///< S(T_v^+)
  PairSet minus;  ///< S(T_v^-)
};

/// S(T_v^+) and S(T_v^-) for every vertex v of the rooted ditree, computed
/// in one bottom-up pass. Throws PreconditionError when j < 2.
std::vector<SubtreeSets> s_sets(const RootedDitree& rooted, unsigned j);

/// True iff the ditree has an L(j,1)-labeling of span j+1. Requires a ditree
/// with at least two vertices and j >= 2. Linear time.
bool decide_span_j_plus_1(const Digraph& tree, unsigned j);

/// A span-(j+1) L(j,1)-labeling when one exists (same preconditions).
std::optional<Labeling> span_j_plus_1_labeling(const Digraph& tree, unsigned j);

/// Exact L(j,1) number of a ditree (j >= 1) from its longest dipath, using
/// the decision procedure when that length is 3, with a witness.
LambdaResult ditree_lambda_j(const Digraph& tree, unsigned j);

}  // namespace dilabel

#endif  // DILABEL_DITREE_SOLVER_HPP
