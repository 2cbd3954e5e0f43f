#ifndef DILABEL_EXACT_SOLVER_HPP
#define DILABEL_EXACT_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "dilabel/digraph.hpp"
#include "dilabel/errors.hpp"
#include "dilabel/labeling.hpp"
#include "dilabel/lambda_result.hpp"

namespace dilabel {

struct SolverLimits {
  std::size_t max_n = 12;
  std::uint64_t max_nodes = 50'000'000;
  /// Run even when n > max_n.
  bool ignore_max_n = false;
};

/// Exact minimum span by iterative deepening over the span with a
/// backtracking feasibility search. Throws PreconditionError when
/// n > limits.max_n (unless ignored). When the node budget runs out the
/// result is the interval [proven lower bound, j(n-1)] with
/// MethodKind::OraclePartial and the trivial labeling v -> v*j as witness.
LambdaResult exact_lambda(const Digraph& d, Separation sep, const SolverLimits& limits = {});

/// Solves each weak component with exact_lambda and takes the maximum.
LambdaResult exact_lambda_components(const Digraph& d, Separation sep,
                                     const SolverLimits& limits = {});

/// A labeling with all labels in [0, span], or nullopt if none exists.
/// `nodes` accumulates search nodes; the search gives up (returns nullopt and
/// sets `exhausted`) when it would exceed `max_nodes`.
std::optional<Labeling> find_labeling_within(const Digraph& d, Separation sep, Label span,
                                             std::uint64_t max_nodes, std::uint64_t& nodes,
                                             bool& exhausted);

}  // namespace dilabel

#endif  // DILABEL_EXACT_SOLVER_HPP
