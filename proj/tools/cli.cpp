#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>

#include "dilabel/digraph.hpp"
#include "dilabel/errors.hpp"
#include "dilabel/fixtures.hpp"
#include "dilabel/labeling.hpp"
#include "dilabel/lambda.hpp"

namespace dilabel::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string labeling;
  unsigned j = 0;
  unsigned k = 1;
  std::string method = "auto";
  std::size_t max_n = SolverLimits{}.max_n;
  std::uint64_t max_nodes = SolverLimits{}.max_nodes;
  bool machine = false;

  Separation separation() const { return Separation(j, k); }
  SolverLimits limits() const {
    SolverLimits l;
    l.max_n = max_n;
    l.max_nodes = max_nodes;
    return l;
  }
};

// Writes "key: value" lines, or "key=value" in machine mode.
class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  template <typename T>
  void field(std::string_view key, const T& value) {
    out_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }
  void flag(std::string_view key, bool value) { field(key, value ? "yes" : "no"); }

 private:
  std::ostream& out_;
  bool machine_;
};

Digraph load_digraph(const std::string& source) {
  constexpr std::string_view kFixture = "fixture:";
  if (source.starts_with(kFixture)) {
    const std::string name = source.substr(kFixture.size());
    if (auto d = fixtures::by_name(name)) return *std::move(d);
    throw UsageError("unknown fixture '" + name + "' (expected P<n>, C<n>, T1 or T2)");
  }
  return read_digraph_file(source);
}

MethodSelector selector(const Options& opt) {
  if (auto m = parse_method_selector(opt.method)) return *m;
  throw UsageError("unknown method '" + opt.method + "'");
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const Digraph d = load_digraph(opt.graph);
  const ClassReport r = classify(d);
  Report rep(out, opt.machine);
  rep.field("vertices", r.n);
  rep.field("edges", r.m);
  rep.flag("strongly-simple", r.strongly_simple);
  rep.flag("bipartite", r.bipartite());
  rep.flag("acyclic", r.acyclic);
  if (opt.machine) {
    rep.field("longest-dipath", r.longest_dipath.length);
    rep.flag("longest-dipath-exact", !r.longest_dipath.at_least);
  } else {
    rep.field("longest-dipath", (r.longest_dipath.at_least ? "≥" : "") +
                                    std::to_string(r.longest_dipath.length));
  }
  rep.field("sources", r.sources.size());
  rep.field("sinks", r.sinks.size());
  rep.flag("ditree", r.is_ditree);
  rep.field("components", r.components.size());
  return kOk;
}

// Machine form of a method: the kind, plus the formula name when there is one.
void method_fields(Report& rep, const Method& m) {
  switch (m.kind) {
    case MethodKind::Formula:
      rep.field("method", "formula");
      rep.field("formula", m.formula);
      return;
    case MethodKind::Dp:
      rep.field("method", "dp");
      return;
    case MethodKind::Oracle:
      rep.field("method", "oracle");
      return;
    case MethodKind::OraclePartial:
      rep.field("method", "oracle-partial");
      return;
  }
}

int exit_code_for(const LambdaResult& r) {
  if (r.exact()) return kOk;
  return r.method.kind == MethodKind::OraclePartial ? kBudgetExceeded : kIntervalOnly;
}

int cmd_lambda(const Options& opt, MethodSelector method, std::ostream& out,
               std::ostream& err) {
  const Digraph d = load_digraph(opt.graph);
  const auto result = compute_lambda(d, opt.separation(), method, opt.limits());
  if (!result) {
    err << "error: no closed form covers this digraph (try --method auto or oracle)\n";
    return kNoMethod;
  }
  if (opt.machine) {
    Report rep(out, true);
    rep.field("lo", result->lo);
    rep.field("hi", result->hi);
    rep.flag("exact", result->exact());
    method_fields(rep, result->method);
  } else if (result->exact()) {
    out << result->value() << " (" << to_string(result->method) << ")\n";
  } else {
    out << '[' << result->lo << ", " << result->hi << "] (" << to_string(result->method)
        << ")\n";
  }
  return exit_code_for(*result);
}

int cmd_label(const Options& opt, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(opt.graph);
  const auto result = compute_lambda(d, opt.separation(), selector(opt), opt.limits());
  if (!result || result->method.kind == MethodKind::OraclePartial) {
    err << "error: no construction applies and the oracle ran out of budget";
    if (result) err << " (span lies in [" << result->lo << ", " << result->hi << "])";
    err << '\n';
    return kNoMethod;
  }
  const Labeling& f = *result->witness;
  if (!verify(d, f).empty()) {
    err << "error: internal error, the produced labeling does not verify\n";
    return kInvalidLabeling;
  }
  if (opt.machine) {
    Report rep(out, true);
    rep.field("span", f.span());
    method_fields(rep, result->method);
    for (Vertex v = 0; v < f.size(); ++v) rep.field("label." + std::to_string(v), f[v]);
  } else {
    out << "# span: " << f.span() << '\n'
        << "# method: " << to_string(result->method) << '\n'
        << to_labeling_text(f);
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Digraph d = load_digraph(opt.graph);
  const Labeling f = read_labeling_file(opt.labeling, d.num_vertices(), opt.separation());
  const auto violations = verify(d, f);
  Report rep(out, opt.machine);
  if (opt.machine) {
    rep.flag("valid", violations.empty());
    rep.field("span", f.span());
    rep.field("violations", violations.size());
    for (std::size_t i = 0; i < violations.size(); ++i) {
      const Violation& v = violations[i];
      std::ostringstream row;
      row << v.x << ',' << v.y << ',' << v.distance << ',' << v.required << ',' << v.actual;
      rep.field("violation." + std::to_string(i), row.str());
    }
  } else if (violations.empty()) {
    out << "valid, span " << f.span() << '\n';
  } else {
    for (const Violation& v : violations) {
      out << "violation: " << v.x << " -> " << v.y << " at distance " << v.distance
          << " differ by " << v.actual << ", need " << v.required << '\n';
    }
  }
  return violations.empty() ? kOk : kInvalidLabeling;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"L(j,k)-labelings of directed graphs", "dilabel"};
  app.require_subcommand(1);
  Options opt;

  const char* graph_help = "edge-list file, or fixture:P<n> | C<n> | T1 | T2";
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--j,-j", opt.j, "separation at distance 1")->required();
    sub->add_option("--k,-k", opt.k, "separation at distance 2 (default 1)");
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-n", opt.max_n, "largest digraph the oracle searches");
    sub->add_option("--max-nodes", opt.max_nodes, "oracle search node budget");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", opt.method, "auto, formula, dp or oracle")
        ->check(CLI::IsMember({"auto", "formula", "dp", "oracle"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "structural report of a digraph");
  classify_cmd->add_option("graph", opt.graph, graph_help)->required();

  CLI::App* lambda_cmd = app.add_subcommand("lambda", "minimum span, or the best known interval");
  lambda_cmd->add_option("graph", opt.graph, graph_help)->required();
  add_params(lambda_cmd);
  add_method(lambda_cmd);
  add_limits(lambda_cmd);

  CLI::App* label_cmd = app.add_subcommand("label", "print a verified labeling");
  label_cmd->add_option("graph", opt.graph, graph_help)->required();
  add_params(label_cmd);
  add_method(label_cmd);
  add_limits(label_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a labeling file against a digraph");
  verify_cmd->add_option("graph", opt.graph, graph_help)->required();
  verify_cmd->add_option("labeling", opt.labeling, "labeling file")->required();
  add_params(verify_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "minimum span by exhaustive search");
  oracle_cmd->add_option("graph", opt.graph, graph_help)->required();
  add_params(oracle_cmd);
  add_limits(oracle_cmd);

  for (CLI::App* sub : {classify_cmd, lambda_cmd, label_cmd, verify_cmd, oracle_cmd})
    sub->add_flag("--machine", opt.machine, "one key=value per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt, out);
    if (*lambda_cmd) return cmd_lambda(opt, selector(opt), out, err);
    if (*label_cmd) return cmd_label(opt, out, err);
    if (*verify_cmd) return cmd_verify(opt, out);
    if (*oracle_cmd) return cmd_lambda(opt, MethodSelector::Oracle, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace dilabel::cli
