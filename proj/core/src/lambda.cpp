#include "dilabel/lambda.hpp"

#include <algorithm>

#include "dilabel/ditree_solver.hpp"
#include "dilabel/structure.hpp"

namespace dilabel {

namespace {

LambdaResult run_oracle(const Digraph& d, Separation sep, const SolverLimits& limits) {
  const std::size_t n = d.num_vertices();
  if (n > limits.max_n && !limits.ignore_max_n) {
    std::vector<Label> values(n);
    for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<Label>(v * sep.j());
    const Label lo = d.num_edges() == 0 ? 0 : sep.j();
    const Label hi = d.num_edges() == 0 ? 0 : static_cast<Label>(sep.j() * (n - 1));
    if (lo == hi) return {lo, hi, Method::oracle(), Labeling(std::vector<Label>(n, 0), sep)};
    return {lo, hi, Method::oracle_partial(), Labeling(std::move(values), sep)};
  }
  return exact_lambda(d, sep, limits);
}

LambdaResult run_dp(const Digraph& d, Separation sep) {
  if (sep.k() != 1) throw PreconditionError("the dp method needs k = 1");
  if (!is_ditree(d)) throw PreconditionError("the dp method needs a ditree");
  return ditree_lambda_j(d, sep.j());
}

}  // namespace

std::optional<MethodSelector> parse_method_selector(std::string_view name) {
  if (name == "auto") return MethodSelector::Auto;
  if (name == "formula") return MethodSelector::Formula;
  if (name == "dp") return MethodSelector::Dp;
  if (name == "oracle") return MethodSelector::Oracle;
  return std::nullopt;
}

std::string_view to_string(MethodSelector m) {
  switch (m) {
    case MethodSelector::Auto: return "auto";
    case MethodSelector::Formula: return "formula";
    case MethodSelector::Dp: return "dp";
    case MethodSelector::Oracle: return "oracle";
  }
  return "unknown";
}

std::optional<LambdaResult> compute_lambda(const Digraph& d, Separation sep,
                                           MethodSelector method, const SolverLimits& limits) {
  switch (method) {
    case MethodSelector::Formula:
      return lambda_by_formula(d, sep);
    case MethodSelector::Dp:
      return run_dp(d, sep);
    case MethodSelector::Oracle:
      return run_oracle(d, sep, limits);
    case MethodSelector::Auto:
      break;
  }

  std::optional<LambdaResult> formula = lambda_by_formula(d, sep);
  if (formula && formula->exact()) return formula;
  if (sep.k() == 1 && is_ditree(d)) return run_dp(d, sep);

  LambdaResult oracle = run_oracle(d, sep, limits);
  if (oracle.exact() || !formula) return oracle;
  formula->lo = std::max(formula->lo, oracle.lo);
  return formula;
}

}  // namespace dilabel
