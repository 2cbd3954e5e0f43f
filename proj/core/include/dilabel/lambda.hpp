#ifndef DILABEL_LAMBDA_HPP
#define DILABEL_LAMBDA_HPP

#include <optional>
#include <string_view>

#include "dilabel/digraph.hpp"
#include "dilabel/exact_solver.hpp"
#include "dilabel/labeling.hpp"
#include "dilabel/lambda_result.hpp"

namespace dilabel {

enum class MethodSelector { Auto, Formula, Dp, Oracle };

std::optional<MethodSelector> parse_method_selector(std::string_view name);
std::string_view to_string(MethodSelector m);

/// Minimum span by the selected method.
///
/// - Formula: closed forms per component; nullopt when some component is
///   not covered.
/// - Dp: ditree decision procedure; throws PreconditionError unless the
///   digraph is a ditree and k = 1.
/// - Oracle: exact search; when n exceeds the limit or the node budget runs
///   out the result is an OraclePartial interval.
/// - Auto: formula if exact, else DP when applicable, else the oracle. If
///   the oracle does not finish, a formula interval (tightened by the
///   oracle's lower bound) is preferred over the oracle's own interval.
std::optional<LambdaResult> compute_lambda(const Digraph& d, Separation sep,
                                           MethodSelector method = MethodSelector::Auto,
                                           const SolverLimits& limits = {});

}  // namespace dilabel

#endif  // DILABEL_LAMBDA_HPP
