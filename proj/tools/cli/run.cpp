#include "cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <deltak/chromatic.hpp>
#include <deltak/closed_forms.hpp>
#include <deltak/coloring_io.hpp>
#include <deltak/error.hpp>
#include <deltak/family_spec.hpp>
#include <deltak/generators.hpp>
#include <deltak/graph_io.hpp>
#include <deltak/heuristic.hpp>

#include "cli/report.hpp"
#include "cli/verify.hpp"

namespace deltak::cli {
namespace {

using Kind = FamilySpec::Kind;

SolverConfig solver_config(const RunConfig& cfg) {
  SolverConfig s;
  s.enumeration_cap = cfg.cap;
  s.node_limit = cfg.node_limit;
  s.count = !cfg.no_count;
  s.workers = std::max(1u, cfg.workers);
  return s;
}

Rule rule_or(const RunConfig& cfg, Rule fallback) {
  return cfg.rule.empty() ? fallback : parse_rule(cfg.rule);
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.family.empty())
    fail(ErrorKind::invalid_parameter, "give exactly one of --input and --family");
  Graph g = cfg.input.empty() ? build(parse_family(cfg.family)).graph : read_graph_file(cfg.input);
  if (cfg.require_connected && !g.connected())
    fail(ErrorKind::invalid_input, "graph is not connected");
  return g;
}

std::optional<FamilyResult> closed_form(const FamilySpec& spec, int k) {
  try {
    switch (spec.kind) {
      case Kind::path:
        if (k == 1) return bk_path(spec.n);
        break;
      case Kind::cycle:
        if (k == 2 && spec.n % 2 == 1) return bk_cycle_odd(spec.n);
        break;
      case Kind::wheel:
        if (k == 2 || (k == 3 && spec.n % 2 == 1)) return bk_wheel(spec.n, k);
        break;
      case Kind::helm:
        if (k == 2 || (k == 3 && spec.n % 2 == 1)) return bk_helm(spec.n, k);
        break;
      case Kind::complete:
        if (k >= 1 && k < spec.n) return bk_complete(spec.n, k);
        break;
      default:
        break;
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

int default_k(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::path:
      return 1;
    case Kind::complete:
      return std::max(1, spec.n - 1);
    default:
      return 2;
  }
}

void warn_if_colourable(const Graph& g, int k, std::ostream& err) {
  try {
    int chi = chromatic_number(g);
    if (k >= chi)
      err << "warning: k=" << k << " is not below the chromatic number " << chi
          << "; a proper colouring exists\n";
  } catch (const Error&) {
  }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool count_only) {
  Graph g = load_graph(cfg);
  Rule rule = rule_or(cfg, Rule::one_class);
  bool surjective = !cfg.allow_unused;
  warn_if_colourable(g, cfg.k, err);

  SolveResult r;
  if (cfg.heuristic && !count_only) {
    r = heuristic_solve(g, cfg.k, rule, surjective, {cfg.seed, 32});
  } else {
    auto s = solver_config(cfg);
    if (count_only) s.count = true;
    r = solve_bk(g, cfg.k, rule, surjective, s);
  }

  if (!cfg.dot.empty()) {
    std::ofstream dot(cfg.dot);
    if (!dot) fail(ErrorKind::invalid_input, "cannot write '" + cfg.dot + "'");
    dot << to_dot(g, r.witness);
  }

  std::optional<FamilyResult> claim;
  if (!cfg.family.empty() && rule == Rule::one_class && surjective)
    claim = closed_form(parse_family(cfg.family), cfg.k);

  if (cfg.json) {
    auto j = solve_json(g, cfg.k, r);
    if (count_only) {
      j.erase("witness");
      j.erase("exact");
    }
    if (claim) j["paper_claim"] = family_json(*claim);
    out << j.dump(2) << "\n";
  } else if (count_only) {
    out << *r.optimal_count << "\n";
  } else {
    print_solve(out, g, cfg.k, r);
    if (claim) {
      out << "claimed:      min_bad=" << claim->min_bad;
      if (claim->coloring_count)
        out << " count=" << *claim->coloring_count << (claim->count_disputed ? " (disputed)" : "");
      out << "\n";
    }
  }
  return exit_ok;
}

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.family.empty()) fail(ErrorKind::invalid_parameter, "--family is required");
  auto spec = parse_family(cfg.family);
  int k = cfg.k > 0 ? cfg.k : default_k(spec);
  auto claim = closed_form(spec, k);
  if (!claim)
    fail(ErrorKind::invalid_parameter,
         "no closed form for " + to_string(spec) + " with k=" + std::to_string(k));
  auto g = build(spec).graph;
  std::optional<SolveResult> exact;
  try {
    exact = solve_bk(g, k, Rule::one_class, true, solver_config(cfg));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::size_limit) throw;
    err << "warning: " << e.what() << "\n";
  }
  bool agree = exact && exact->min_bad == claim->min_bad &&
               (!claim->coloring_count || !exact->optimal_count ||
                *exact->optimal_count == *claim->coloring_count);
  std::string status = !exact ? "oracle-infeasible" : agree ? "match" : "mismatch";

  if (cfg.json) {
    auto j = family_json(*claim);
    j["oracle_min_bad"] = exact ? nlohmann::json(exact->min_bad) : nlohmann::json(nullptr);
    j["oracle_count"] = exact && exact->optimal_count ? nlohmann::json(*exact->optimal_count)
                                                      : nlohmann::json(nullptr);
    j["status"] = status;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << claim->family << " n=" << claim->n << " k=" << claim->k << "\n"
      << "claimed:      min_bad=" << claim->min_bad << " count="
      << (claim->coloring_count ? std::to_string(*claim->coloring_count) : "unclaimed")
      << (claim->count_disputed ? " (disputed)" : "") << "\n"
      << "source:       " << claim->source << "\n";
  if (exact) {
    out << "oracle:       min_bad=" << exact->min_bad;
    if (exact->optimal_count) out << " count=" << *exact->optimal_count;
    out << "\n";
  }
  out << "status:       " << status << "\n";
  return exit_ok;
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty() || !cfg.lambda)
    fail(ErrorKind::invalid_parameter, "poly needs --family and --lambda");
  auto spec = parse_family(cfg.family);
  nlohmann::json j{{"family", std::string(kind_name(spec.kind))}, {"n", spec.n}, {"lambda", *cfg.lambda}};
  std::int64_t value = 0;
  if (spec.kind == Kind::cycle) {
    if (!cfg.bad) fail(ErrorKind::invalid_parameter, "cycle polynomial needs --bad");
    value = defect_poly_cycle(spec.n, *cfg.bad, *cfg.lambda);
    j["bad"] = *cfg.bad;
  } else if (spec.kind == Kind::complete) {
    if (cfg.k <= 0) fail(ErrorKind::invalid_parameter, "complete polynomial needs --k");
    value = static_cast<std::int64_t>(defect_poly_complete(spec.n, cfg.k, *cfg.lambda));
    j["k"] = cfg.k;
  } else {
    fail(ErrorKind::invalid_parameter, "defect polynomials are available for cycle and complete");
  }
  if (cfg.json) {
    j["value"] = value;
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return exit_ok;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) fail(ErrorKind::invalid_parameter, "--family is required");
  auto spec = parse_family(cfg.family);
  if (!spec.is_operation())
    fail(ErrorKind::invalid_parameter, "bounds needs union(a,b), join(a,b) or corona(a,b)");
  auto g = build(spec.operands[0]).graph;
  auto h = build(spec.operands[1]).graph;
  BoundOptions o;
  o.relaxed = cfg.relaxed;
  o.solver = solver_config(cfg);
  BoundReport r;
  if (spec.kind == Kind::join) {
    o.rule = rule_or(cfg, Rule::unrestricted);
    r = join_bound(g, h, cfg.k, o);
  } else {
    o.rule = rule_or(cfg, Rule::one_class);
    r = spec.kind == Kind::corona ? corona_formula(g, h, cfg.k, o) : union_bound(g, h, cfg.k, o);
  }
  if (cfg.json)
    out << bound_json(r).dump(2) << "\n";
  else
    print_bound(out, r);
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto report = run_verify(cfg.suite, cfg.seed, solver_config(cfg));
  if (cfg.json)
    out << verify_json(report).dump(2) << "\n";
  else
    print_verify(out, report);
  return report.unflagged_mismatches() > 0 ? exit_mismatch : exit_ok;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if ((cfg.random_n > 0) == !cfg.family.empty())
    fail(ErrorKind::invalid_parameter, "give exactly one of --family and --random");
  if (cfg.random_n > 0) {
    write_graph(out, random_connected(cfg.random_n, cfg.density, cfg.seed));
    return exit_ok;
  }
  write_graph(out, build(parse_family(cfg.family)).graph);
  return exit_ok;
}

void add_input(CLI::App* app, RunConfig& cfg) {
  app->add_option("--input", cfg.input, "Graph file (edge list or DIMACS)");
  app->add_option("--family", cfg.family, "Family spec, e.g. cycle:5 or join(complete:3,cycle:4)");
  app->add_flag("--require-connected", cfg.require_connected, "Reject disconnected graphs");
}

void add_solver(CLI::App* app, RunConfig& cfg) {
  app->add_option("--cap", cfg.cap, "Largest k^n the enumeration oracle may visit");
  app->add_option("--node-limit", cfg.node_limit, "Branch and bound node budget");
  app->add_option("--workers", cfg.workers, "Solver threads")->check(CLI::PositiveNumber);
}

void add_rule(CLI::App* app, RunConfig& cfg) {
  app->add_option("--rule", cfg.rule, "one-class or unrestricted")
      ->check(CLI::IsMember({"one-class", "unrestricted"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Near proper colourings: minimum bad edges with k colours"};
  app.name("deltak");
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Minimum bad edges, optimal count and witness");
  auto* count = app.add_subcommand("count", "Number of optimal colourings");
  for (auto* sub : {solve, count}) {
    add_input(sub, cfg);
    add_solver(sub, cfg);
    add_rule(sub, cfg);
    sub->add_option("--k", cfg.k, "Colour budget")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--allow-unused", cfg.allow_unused, "Do not require every colour to be used");
    sub->add_flag("--json", cfg.json, "JSON output");
  }
  solve->add_flag("--heuristic", cfg.heuristic, "Local search upper bound instead of exact search");
  solve->add_option("--seed", cfg.seed, "Seed for --heuristic");
  solve->add_flag("--no-count", cfg.no_count, "Skip counting optimal colourings");
  solve->add_option("--dot", cfg.dot, "Write the witness colouring as Graphviz DOT");

  auto* family = app.add_subcommand("family", "Closed-form value for a named family, with oracle check");
  family->add_option("--family", cfg.family, "path:n, cycle:n, wheel:n, helm:n or complete:n")->required();
  family->add_option("--k", cfg.k, "Colour budget (family default when omitted)");
  family->add_flag("--json", cfg.json, "JSON output");
  add_solver(family, cfg);

  auto* poly = app.add_subcommand("poly", "Defect polynomial value for cycles and complete graphs");
  poly->add_option("--family", cfg.family, "cycle:n or complete:n")->required();
  poly->add_option("--lambda", cfg.lambda, "Available colours")->required();
  poly->add_option("--bad", cfg.bad, "Bad-edge count (cycles)");
  poly->add_option("--k", cfg.k, "Colour count (complete graphs)");
  poly->add_flag("--json", cfg.json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "Union/join bound or corona formula against the exact value");
  bounds->add_option("--family", cfg.family, "union(a,b), join(a,b) or corona(a,b)")->required();
  bounds->add_option("--k", cfg.k, "Colour budget")->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--relaxed", cfg.relaxed, "Colour the left operand from all k colours");
  bounds->add_flag("--json", cfg.json, "JSON output");
  add_rule(bounds, cfg);
  add_solver(bounds, cfg);

  auto* verify = app.add_subcommand("verify", "Check every closed form against the oracle");
  verify->add_option("--suite", cfg.suite, "families, polys, operations, random or all")
      ->check(CLI::IsMember({"families", "polys", "operations", "random", "all"}));
  verify->add_option("--seed", cfg.seed, "Seed for random instances");
  verify->add_flag("--json", cfg.json, "JSON output");
  add_solver(verify, cfg);

  auto* gen = app.add_subcommand("gen", "Write a graph in canonical edge-list form");
  gen->add_option("--family", cfg.family, "Family spec");
  gen->add_option("--random", cfg.random_n, "Random connected graph on this many vertices");
  gen->add_option("--density", cfg.density, "Extra-edge probability for --random")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", cfg.seed, "Seed for --random");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out, err, false);
    if (cfg.subcommand == "count") return cmd_solve(cfg, out, err, true);
    if (cfg.subcommand == "family") return cmd_family(cfg, out, err);
    if (cfg.subcommand == "poly") return cmd_poly(cfg, out);
    if (cfg.subcommand == "bounds") return cmd_bounds(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "gen") return cmd_gen(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return exit_invalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::size_limit ? exit_size_limit : exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
}

}  // namespace deltak::cli
