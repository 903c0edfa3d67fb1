// Command-line front end: canonicalize, plan, validate, gen, analyze, oracle, stats.
//
// Exit codes: 0 success, 1 validation/expectation failure, 2 parse error,
// 3 infeasible input, 4 internal assertion.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperslide.hpp"

namespace {

using namespace hyperslide;

enum ExitCode : int { kOk = 0, kValidation = 1, kParse = 2, kInfeasible = 3, kInternal = 4 };

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write(out);
}

void write_cell_list(std::ostream& out, const std::vector<Cell>& cells) {
  for (const Cell& c : cells) out << ' ' << to_string(c);
  out << '\n';
}

int run_canonicalize(const std::string& in, const std::string& out) {
  Configuration v = load_configuration(in);
  CanonicalResult result = canonicalize(v);
  emit(out, [&](std::ostream& os) { write_trace(os, v.dim(), result.trace.moves); });
  std::cerr << "moves " << result.trace.moves.size() << '\n'
            << "anchor " << to_string(result.chain.anchor) << '\n'
            << "length " << result.chain.length << '\n';
  return kOk;
}

int run_plan(const std::string& from, const std::string& to, const std::string& out) {
  Configuration a = load_configuration(from);
  Configuration b = load_configuration(to);
  Trace t = plan(a, b);
  emit(out, [&](std::ostream& os) { write_trace(os, a.dim(), t.moves); });
  std::cerr << "moves " << t.moves.size() << '\n';
  return kOk;
}

int run_validate(const std::string& config, const std::string& trace, const std::string& expect) {
  Configuration v = load_configuration(config);
  TraceFile tf = load_trace(trace);
  if (tf.dim != v.dim()) throw InfeasibleError("trace dimension does not match the configuration");
  Configuration reached = [&] {
    try {
      return validate_trace({v, tf.moves});
    } catch (const PreconditionError& e) {
      throw InfeasibleError(e.what());
    }
  }();
  if (!expect.empty()) {
    Configuration want = load_configuration(expect);
    if (!(want == reached)) {
      std::cerr << "final configuration differs from " << expect << '\n';
      return kValidation;
    }
  }
  std::cout << "ok " << tf.moves.size() << " moves\n";
  write_configuration(std::cout, reached);
  return kOk;
}

int run_gen(std::size_t n, std::size_t d, std::uint64_t seed, const std::string& style, const std::string& out) {
  Configuration v = random_connected({n, d, seed, parse_style(style)});
  emit(out, [&](std::ostream& os) { write_configuration(os, v); });
  return kOk;
}

int run_analyze(const std::string& in) {
  Configuration v = load_configuration(in);
  BoundarySummary boundary = outer_boundary(v);
  std::vector<Cell> cut = articulation_modules(v);
  std::cout << "n " << v.size() << '\n'
            << "d " << v.dim() << '\n'
            << "connected " << (is_connected(v) ? "yes" : "no") << '\n'
            << "boundary_modules " << boundary.modules.size() << '\n'
            << "outer_faces " << boundary.faces.size() << '\n'
            << "holes " << boundary.holes.size() << '\n'
            << "articulation_modules " << cut.size() << '\n'
            << "articulation";
  write_cell_list(std::cout, cut);
  std::cout << "nonarticulate_modules " << v.size() - cut.size() << '\n';
  return kOk;
}

int run_oracle(const std::string& from, const std::string& to, std::size_t max_states) {
  OracleResult r = oracle_reachable(load_configuration(from), load_configuration(to), max_states);
  std::cout << "status " << (r.budget_exhausted ? "budget-exhausted" : "complete") << '\n'
            << "reachable " << (r.reachable ? "yes" : "no") << '\n'
            << "min_moves " << (r.min_moves ? std::to_string(*r.min_moves) : "-") << '\n'
            << "states_explored " << r.states_explored << '\n';
  return kOk;
}

int run_stats(std::size_t d, const std::vector<std::size_t>& ns, std::size_t trials, std::uint64_t seed, const std::string& style) {
  auto rows = stats_run(d, ns, trials, seed, parse_style(style));
  write_stats_csv(std::cout, rows);
  if (ns.size() >= 2) std::cerr << "loglog_slope " << loglog_slope(rows) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconfiguration planner for sliding hypercube modules"};
  app.require_subcommand(1);
  int code = kOk;

  std::string in, out, from, to, config, trace, expect, style = "blob";
  std::size_t n = 0, d = 2, trials = 1, max_states = 5'000'000;
  std::uint64_t seed = 0;
  std::vector<std::size_t> ns;

  auto* canon = app.add_subcommand("canonicalize", "Reconfigure into the straight +x1 chain");
  canon->add_option("--in", in, "input .cfg")->required();
  canon->add_option("--out", out, "output .trace ('-' for stdout)")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Plan a trace from one configuration to another");
  plan_cmd->add_option("--from", from, "source .cfg")->required();
  plan_cmd->add_option("--to", to, "target .cfg")->required();
  plan_cmd->add_option("--out", out, "output .trace ('-' for stdout)")->required();

  auto* validate = app.add_subcommand("validate", "Replay a trace and check every move");
  validate->add_option("--config", config, "initial .cfg")->required();
  validate->add_option("--trace", trace, ".trace to replay")->required();
  validate->add_option("--expect", expect, "expected final .cfg");

  auto* gen = app.add_subcommand("gen", "Generate a random connected configuration");
  gen->add_option("--n", n, "module count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--d", d, "dimension")->required()->check(CLI::Range(2, 64));
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--style", style, "blob | tree | serpentine");
  gen->add_option("--out", out, "output .cfg ('-' for stdout)")->required();

  auto* analyze = app.add_subcommand("analyze", "Report boundary and articulation structure");
  analyze->add_option("--in", in, "input .cfg")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reachability search for tiny instances");
  oracle->add_option("--from", from, "source .cfg")->required();
  oracle->add_option("--to", to, "target .cfg")->required();
  oracle->add_option("--max-states", max_states, "state budget");

  auto* stats = app.add_subcommand("stats", "Move counts of canonicalization as CSV");
  stats->add_option("--d", d, "dimension")->required()->check(CLI::Range(2, 64));
  stats->add_option("--n", ns, "comma-separated module counts")->required()->delimiter(',');
  stats->add_option("--trials", trials, "trials per n")->required();
  stats->add_option("--seed", seed, "random seed")->required();
  std::string stats_style = "serpentine";
  stats->add_option("--style", stats_style, "blob | tree | serpentine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*canon) code = run_canonicalize(in, out);
    else if (*plan_cmd) code = run_plan(from, to, out);
    else if (*validate) code = run_validate(config, trace, expect);
    else if (*gen) code = run_gen(n, d, seed, style, out);
    else if (*analyze) code = run_analyze(in);
    else if (*oracle) code = run_oracle(from, to, max_states);
    else if (*stats) code = run_stats(d, ns, trials, seed, stats_style);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const TraceError& e) {
    std::cerr << "invalid trace: " << e.what() << '\n';
    return kValidation;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const PreconditionError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return code;
}
