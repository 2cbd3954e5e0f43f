#ifndef DILABEL_STRUCTURE_HPP
#define DILABEL_STRUCTURE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "dilabel/digraph.hpp"
#include "dilabel/errors.hpp"
#include "dilabel/labeling.hpp"
#include "dilabel/lambda_result.hpp"

namespace dilabel {

/// Which closed-form result applies to a (weakly connected) digraph.
enum class Case {
  NoEdge,
  L1,              ///< longest dipath 1: every vertex a source or a sink
  L2Bipartite,     ///< longest dipath 2, bipartite: j + k
  L2NonBipartite,  ///< longest dipath 2, not bipartite: 2j
  L3Bipartite,     ///< longest dipath 3, bipartite: [j + k, j + 2k]
  DitreeGeneral,   ///< ditree with a dipath of length 4: min{2j, j + 2k}
  Unclassified,
};

std::string_view to_string(Case c);

/// Case plus the structural facts the matching construction needs.
struct CaseTag {
  Case kind = Case::Unclassified;
  std::optional<Bipartition> bipartition;
  std::vector<Vertex> sources;
};

/// Most specific applicable case for the digraph described by `report`.
/// Meant for one weak component; on a disconnected report it uses the
/// global facts (longest dipath and bipartiteness are per-union anyway, but
/// ditree-ness is not).
CaseTag classify_case(const ClassReport& report);

struct ComponentCase {
  Component component;
  ClassReport report;
  CaseTag tag;
};

/// classify_case applied to each weak component.
std::vector<ComponentCase> classify_components(const Digraph& d);

/// Sources get 0, everything else j. Requires m >= 1 and every vertex a
/// source or a sink; span j.
Labeling label_l1(const Digraph& d, Separation sep);

/// Four-valued labeling {0, k, j, j+k} keyed on side and source-ness.
/// Requires a bipartite digraph with longest dipath 2; span j + k.
Labeling label_l2_bipartite(const Digraph& d, Separation sep, const Bipartition& part);

/// C3 gets (0, j, 2j); otherwise sources / inner vertices / sinks get
/// 0 / j / 2j. Requires connected, non-bipartite, longest dipath 2; span 2j.
Labeling label_l2_nonbipartite(const Digraph& d, Separation sep);

/// The labeling (0, j+k, k, j+2k) around a C4.
Labeling c4_labeling(Separation sep);

/// C4 gets c4_labeling; otherwise {0, k, j+k, j+2k} keyed on side and
/// membership in S (sources plus vertices whose in-neighbours are all
/// sources). Requires connected, bipartite, longest dipath 3; span <= j+2k.
Labeling label_l3_bipartite(const Digraph& d, Separation sep, const Bipartition& part);

/// Homomorphism of a ditree into the n-dicycle (n >= 3): vertex 0 maps to
/// 0 and every edge u->w satisfies h(w) = h(u) + 1 (mod n).
std::vector<Vertex> ditree_homomorphism(const Digraph& tree, std::size_t cycle_length);

/// Composes the homomorphism into C3 (labels 0, j, 2j) when 2j <= j+2k and
/// into C4 (c4_labeling) otherwise; span <= min{2j, j+2k}.
Labeling label_ditree_via_cycle(const Digraph& tree, Separation sep);

/// Closed-form value (or interval for L3Bipartite) combined over weak
/// components by maximum, with a witness assembled from the constructions.
/// nullopt when some component is Unclassified.
std::optional<LambdaResult> lambda_by_formula(const Digraph& d, Separation sep);

/// Same, reusing an existing per-component classification.
std::optional<LambdaResult> lambda_by_formula(const Digraph& d,
                                              const std::vector<ComponentCase>& cases,
                                              Separation sep);

}  // namespace dilabel

#endif  // DILABEL_STRUCTURE_HPP
