#ifndef DILABEL_LAMBDA_RESULT_HPP
#define DILABEL_LAMBDA_RESULT_HPP

#include <optional>
#include <string>

#include "dilabel/labeling.hpp"

namespace dilabel {

enum class MethodKind { Formula, Dp, Oracle, OraclePartial };

/// How a value was obtained. `formula` names the closed form for
/// MethodKind::Formula (e.g. "l2-bipartite").
struct Method {
  MethodKind kind = MethodKind::Oracle;
  std::string formula;

  static Method from_formula(std::string name) { return {MethodKind::Formula, std::move(name)}; }
  static Method dp() { return {MethodKind::Dp, {}}; }
  static Method oracle() { return {MethodKind::Oracle, {}}; }
  static Method oracle_partial() { return {MethodKind::OraclePartial, {}}; }

  friend bool operator==(const Method&, const Method&) = default;
};

/// "formula: l2-bipartite", "dp", "oracle", "oracle-partial".
std::string to_string(const Method& m);

/// Exact value (lo == hi) or an interval [lo, hi] for the minimum span, with
/// an optional witness whose span equals `hi`.
struct LambdaResult {
  Label lo = 0;
  Label hi = 0;
  Method method;
  std::optional<Labeling> witness;

  bool exact() const noexcept { return lo == hi; }
  Label value() const noexcept { return hi; }
};

}  // namespace dilabel

#endif  // DILABEL_LAMBDA_RESULT_HPP
