#include "mlsa/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlsa/bench.hpp"
#include "mlsa/digraph.hpp"
#include "mlsa/generators.hpp"
#include "mlsa/json_io.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/oracles.hpp"
#include "mlsa/packing.hpp"
#include "mlsa/reduction.hpp"

namespace mlsa {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return kExitIo;
    case ErrorKind::kParse: return kExitParse;
    case ErrorKind::kBudgetExceeded:
    case ErrorKind::kGenerationTimeout: return kExitBudget;
    default: return kExitFailed;
  }
}

namespace {

// Failures the user sees as a check that did not pass rather than an error.
struct CheckFailed {
  std::string message;
};

std::string format_set(const ElementSet& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(s[i]);
  }
  return text + "}";
}

// Writes to `path`, or to `out` when path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  write(file);
  if (!file) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

// A family JSON or a generated lower-bound file.
SetFamily load_family(const std::string& path) {
  const auto j = read_json_file(path);
  if (j.is_object() && j.contains("family")) return lower_bound_from_json(j).family;
  return family_from_json(j);
}

Digraph load_valid_dag(const std::string& path) {
  Digraph g = read_dag_file(path);
  if (auto violation = validate_instance(g)) {
    throw Error(ErrorKind::kInvalidInstance, "invalid instance: " + violation->describe());
  }
  return g;
}

const char* condition_name(ArborescenceViolationKind kind) {
  switch (kind) {
    case ArborescenceViolationKind::kSizeMismatch: return "vertex set condition violated";
    case ArborescenceViolationKind::kRootHasParent:
    case ArborescenceViolationKind::kMissingParent: return "partition condition violated";
    case ArborescenceViolationKind::kNotSubgraph: return "arc condition violated";
    case ArborescenceViolationKind::kUnreachable: return "reachability condition violated";
  }
  return "condition violated";
}

nlohmann::json stats_json(const SolveStats& stats, int leaves, double ms) {
  const SearchStats& s = stats.search;
  return {{"leaves", leaves},
          {"large_weight", stats.large_weight},
          {"residual_weight", stats.residual_weight},
          {"num_maximal_sets", stats.num_maximal_sets},
          {"residual_maximal_sets", stats.residual_maximal_sets},
          {"num_candidates", s.num_candidates},
          {"iterations", s.iterations},
          {"weight_increases", s.weight_increases},
          {"plateau_moves", s.plateau_moves},
          {"max_plateau_run", s.max_plateau_run},
          {"candidates_examined", s.candidates_examined},
          {"ms", ms}};
}

struct SolveArgs {
  std::string dag;
  int t = 10;
  std::string seed_order = "sorted";
  bool exhaustive = false;
  bool verify = false;
  std::string out;
  std::string stats_out;
};

void cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Digraph g = load_valid_dag(args.dag);
  SearchOptions options;
  options.max_size = args.t;
  options.seed_order = args.seed_order == "input" ? SeedOrder::kInput : SeedOrder::kSorted;
  options.mode = args.exhaustive ? SearchMode::kExhaustive : SearchMode::kConnected;
  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = solve_mlsa(g, options);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const int leaves = count_leaves(result.arborescence);
  if (args.verify) {
    if (auto violation = verify_arborescence(g, result.arborescence)) {
      throw CheckFailed{violation->describe() + ": " + condition_name(violation->kind)};
    }
  }
  if (!args.out.empty()) {
    emit(args.out, out, [&](std::ostream& os) { write_arb(os, result.arborescence); });
  }
  out << "leaves: " << leaves << (args.verify ? ", verified" : "") << '\n';
  const std::string stats = stats_json(result.stats, leaves, ms).dump();
  if (args.stats_out.empty()) {
    err << stats << '\n';
  } else {
    emit(args.stats_out, out, [&](std::ostream& os) { os << stats << '\n'; });
  }
}

struct ExactArgs {
  std::string dag;
  std::string family;
  int budget = 0;
  std::string out;
};

void cmd_exact(const ExactArgs& args, std::ostream& out) {
  if (!args.dag.empty()) {
    const Digraph g = load_valid_dag(args.dag);
    const auto result = exact_mlsa(g, args.budget > 0 ? args.budget : 14);
    if (!args.out.empty()) {
      emit(args.out, out, [&](std::ostream& os) { write_arb(os, result.witness); });
    }
    out << "leaves: " << result.leaves << '\n';
    return;
  }
  const SetFamily f = load_family(args.family);
  const auto result = exact_packing(f, args.budget > 0 ? args.budget : 10'000);
  if (!args.out.empty()) {
    emit(args.out, out,
         [&](std::ostream& os) { os << packing_to_json(result.witness).dump(2) << '\n'; });
  }
  out << "weight: " << result.weight << '\n';
}

struct VerifyArgs {
  std::string dag;
  std::string arb;
  std::string family;
  std::string packing;
  std::optional<int> t;
  long long budget = 50'000'000;
};

void cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (!args.dag.empty()) {
    const Digraph g = read_dag_file(args.dag);
    if (auto violation = validate_instance(g)) {
      throw CheckFailed{"instance: " + violation->describe()};
    }
    if (!args.arb.empty()) {
      const Arborescence t = read_arb_file(args.arb);
      if (auto violation = verify_arborescence(g, t)) {
        throw CheckFailed{"arborescence: " + violation->describe() + ": " +
                          condition_name(violation->kind)};
      }
    }
  }
  if (!args.family.empty()) {
    const SetFamily f = load_family(args.family);
    Packing a(f.ground_size());
    try {
      a = packing_from_json(read_json_file(args.packing), f.ground_size());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInfeasible || e.kind() == ErrorKind::kElementOutOfRange) {
        throw CheckFailed{std::string("packing: ") + e.what()};
      }
      throw;
    }
    if (auto problem = check_packing(f, a)) throw CheckFailed{"packing: " + *problem};
    if (args.t) {
      const auto check = exhaustive_no_improvement(f, a, *args.t, args.budget);
      if (!check.locally_optimal) {
        std::string sets;
        for (const auto& s : check.witness) sets += " " + format_set(s);
        throw CheckFailed{"local optimality violated: improvement" + sets};
      }
    }
  }
  out << "ok\n";
}

struct CheckArgs {
  std::string family;
  std::string packing;
  int t = 10;
  long long budget = 50'000'000;
};

void cmd_check_local_opt(const CheckArgs& args, std::ostream& out) {
  const SetFamily f = load_family(args.family);
  const Packing a = packing_from_json(read_json_file(args.packing), f.ground_size());
  if (auto problem = check_packing(f, a)) throw Error(ErrorKind::kInfeasible, *problem);
  const auto check = exhaustive_no_improvement(f, a, args.t, args.budget);
  if (!check.locally_optimal) {
    std::string sets;
    for (const auto& s : check.witness) sets += " " + format_set(s);
    throw CheckFailed{"improvement of size " + std::to_string(check.witness.size()) + ":" + sets};
  }
  out << "locally optimal for t = " << args.t << " (" << check.nodes << " nodes)\n";
}

struct BenchArgs {
  std::string dir;
  int random = 0;
  int n_max = 12;
  double density = 0.3;
  std::uint64_t seed = 1;
  std::vector<int> t_values{10};
  std::string force_start;
  bool exhaustive = false;
  std::string out;
};

void cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const auto instances = args.dir.empty()
                             ? random_bench_instances(args.random, args.n_max, args.density, args.seed)
                             : load_bench_dir(args.dir);
  BenchOptions options;
  options.t_values = args.t_values;
  options.search.mode = args.exhaustive ? SearchMode::kExhaustive : SearchMode::kConnected;
  if (!args.force_start.empty()) options.force_start = args.force_start;
  const auto rows = run_bench(instances, options);
  for (const auto& row : rows) {
    if (!row.failure.empty()) err << row.instance << " (t=" << row.t << "): " << row.failure << '\n';
  }
  emit(args.out, out, [&](std::ostream& os) { write_bench_csv(os, rows); });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum leaf spanning arborescences in DAGs via hereditary set packing", "mlsa"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate a maximum leaf spanning arborescence");
  solve_cmd->add_option("dag", solve.dag, "Instance in .dag format")->required();
  solve_cmd->add_option("--t", solve.t, "Largest improvement size")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed-order", solve.seed_order, "Candidate order")
      ->check(CLI::IsMember({"input", "sorted"}));
  solve_cmd->add_flag("--exhaustive", solve.exhaustive, "Search all disjoint collections");
  solve_cmd->add_flag("--verify", solve.verify, "Verify the arborescence");
  solve_cmd->add_option("--out", solve.out, "Write the arborescence (.arb)");
  solve_cmd->add_option("--stats-out", solve.stats_out, "Write stats JSON here instead of stderr");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum of a small DAG or set family");
  auto* exact_dag = exact_cmd->add_option("--dag", exact.dag, "Instance in .dag format");
  auto* exact_family = exact_cmd->add_option("--family", exact.family, "Set family JSON");
  exact_dag->excludes(exact_family);
  exact_cmd->add_option("--budget", exact.budget, "Vertex limit (--dag) or candidate limit (--family)");
  exact_cmd->add_option("--out", exact.out, "Write the optimal solution");

  std::string reduce_dag, reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Set family of a DAG");
  reduce_cmd->add_option("dag", reduce_dag, "Instance in .dag format")->required();
  reduce_cmd->add_option("--out", reduce_out, "Output JSON (default stdout)");

  std::string lift_dag, lift_packing, lift_out;
  auto* lift_cmd = app.add_subcommand("lift", "Arborescence from a packing");
  lift_cmd->add_option("--dag", lift_dag, "Instance in .dag format")->required();
  lift_cmd->add_option("--packing", lift_packing, "Packing JSON over V(dag)")->required();
  lift_cmd->add_option("--out", lift_out, "Output .arb (default stdout)");

  int gen_n = 0;
  double gen_density = 0.3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_dag_cmd = app.add_subcommand("gen-dag", "Random rooted DAG");
  gen_dag_cmd->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen_dag_cmd->add_option("--density", gen_density, "Forward arc probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_dag_cmd->add_option("--seed", gen_seed, "RNG seed");
  gen_dag_cmd->add_option("--out", gen_out, "Output .dag (default stdout)");

  int lb_k = 3, lb_t = 1;
  std::uint64_t lb_seed = 1;
  std::optional<int> lb_girth;
  std::string lb_out;
  auto* gen_lb_cmd = app.add_subcommand("gen-lowerbound", "Locally optimal instance with ratio 2 - 2/k");
  gen_lb_cmd->add_option("--k", lb_k, "Set size bound (>= 3)")->check(CLI::Range(3, 64));
  gen_lb_cmd->add_option("--t", lb_t, "Improvement size the instance defeats")
      ->check(CLI::PositiveNumber);
  gen_lb_cmd->add_option("--seed", lb_seed, "RNG seed");
  gen_lb_cmd->add_option("--base-girth", lb_girth, "Girth required of the base graph");
  gen_lb_cmd->add_option("--out", lb_out, "Output JSON (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an arborescence or a packing");
  auto* verify_dag = verify_cmd->add_option("--dag", verify.dag, "Instance in .dag format");
  verify_cmd->add_option("--arb", verify.arb, "Arborescence to check")->needs(verify_dag);
  auto* verify_family = verify_cmd->add_option("--family", verify.family, "Set family JSON");
  auto* verify_packing = verify_cmd->add_option("--packing", verify.packing, "Packing JSON");
  verify_family->needs(verify_packing);
  verify_packing->needs(verify_family);
  verify_cmd->add_option("--t", verify.t, "Also certify local optimality up to this size")
      ->needs(verify_packing);
  verify_cmd->add_option("--budget", verify.budget, "Node budget of the local optimality check");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check-local-opt", "Exhaustive local optimality check");
  check_cmd->add_option("--family", check.family, "Set family JSON")->required();
  check_cmd->add_option("--packing", check.packing, "Packing JSON")->required();
  check_cmd->add_option("--t", check.t, "Largest improvement size")->check(CLI::PositiveNumber);
  check_cmd->add_option("--budget", check.budget, "Enumeration node budget");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare against exact optima, CSV output");
  auto* bench_dir = bench_cmd->add_option("--dir", bench.dir, "Directory of instances");
  auto* bench_random = bench_cmd->add_option("--random", bench.random, "Number of random DAGs");
  bench_dir->excludes(bench_random);
  bench_cmd->add_option("--n-max", bench.n_max, "Largest random DAG")->check(CLI::Range(2, 1'000'000));
  bench_cmd->add_option("--density", bench.density, "Forward arc probability")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--t", bench.t_values, "Improvement sizes")->delimiter(',');
  bench_cmd->add_option("--force-start", bench.force_start,
                        "Start family instances from a packing file or \"A\" (experimental)");
  bench_cmd->add_flag("--exhaustive", bench.exhaustive, "Search all disjoint collections");
  bench_cmd->add_option("--out", bench.out, "Output CSV (default stdout)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
    if (*exact_cmd && exact.dag.empty() && exact.family.empty()) {
      throw CLI::ValidationError("exact needs --dag or --family");
    }
    if (*verify_cmd && verify.dag.empty() && verify.family.empty()) {
      throw CLI::ValidationError("verify needs --dag or --family/--packing");
    }
    if (*bench_cmd && bench.dir.empty() && bench.random <= 0) {
      throw CLI::ValidationError("bench needs --dir or --random");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*solve_cmd) {
      cmd_solve(solve, out, err);
    } else if (*exact_cmd) {
      cmd_exact(exact, out);
    } else if (*reduce_cmd) {
      const SetFamily f = family_from_dag(load_valid_dag(reduce_dag));
      emit(reduce_out, out, [&](std::ostream& os) { os << family_to_json(f).dump(2) << '\n'; });
    } else if (*lift_cmd) {
      const Digraph g = load_valid_dag(lift_dag);
      const Packing a = packing_from_json(read_json_file(lift_packing), g.num_vertices());
      const Arborescence t = packing_to_arborescence(g, a);
      emit(lift_out, out, [&](std::ostream& os) { write_arb(os, t); });
      if (!lift_out.empty()) out << "leaves: " << count_leaves(t) << '\n';
    } else if (*gen_dag_cmd) {
      const Digraph g = gen_random_dag(gen_n, gen_density, gen_seed);
      emit(gen_out, out, [&](std::ostream& os) { write_dag(os, g); });
    } else if (*gen_lb_cmd) {
      const auto inst = gen_lower_bound(lb_k, lb_t, lb_seed, lb_girth);
      emit(lb_out, out, [&](std::ostream& os) { os << lower_bound_to_json(inst).dump(2) << '\n'; });
      err << "base " << inst.base_source << ", incidence girth " << inst.girth << ", w(A) "
          << inst.a_solution.weight() << ", w(B) " << inst.b_solution.weight()
          << (inst.certified ? ", certified" : ", not certified") << '\n';
    } else if (*verify_cmd) {
      cmd_verify(verify, out);
    } else if (*check_cmd) {
      cmd_check_local_opt(check, out);
    } else if (*bench_cmd) {
      cmd_bench(bench, out, err);
    }
  } catch (const CheckFailed& failure) {
    err << "check failed: " << failure.message << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitOk;
}

}  // namespace mlsa
