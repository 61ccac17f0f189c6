#include "mlsa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <random>

#include "mlsa/error.hpp"
#include "mlsa/generators.hpp"
#include "mlsa/json_io.hpp"
#include "mlsa/oracles.hpp"
#include "mlsa/reduction.hpp"

namespace mlsa {

namespace fs = std::filesystem;

std::vector<BenchInstance> load_bench_dir(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::kIo, "not a directory: '" + dir + "'");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<BenchInstance> instances;
  for (const auto& path : paths) {
    BenchInstance inst;
    inst.name = path.filename().string();
    if (path.extension() == ".dag") {
      inst.dag = read_dag_file(path.string());
    } else if (path.extension() == ".json") {
      const auto j = read_json_file(path.string());
      if (j.contains("family")) {
        auto lb = lower_bound_from_json(j);
        inst.family = std::move(lb.family);
        inst.a_solution = std::move(lb.a_solution);
      } else if (j.contains("maximal_sets")) {
        inst.family = family_from_json(j);
      } else {
        continue;
      }
    } else {
      continue;
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

std::vector<BenchInstance> random_bench_instances(int count, int n_max, double density,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, std::max(2, n_max));
  std::vector<BenchInstance> instances;
  for (int i = 0; i < count; ++i) {
    BenchInstance inst;
    inst.name = "random-" + std::to_string(i);
    inst.dag = gen_random_dag(size(rng), density, seed + static_cast<std::uint64_t>(i));
    instances.push_back(std::move(inst));
  }
  return instances;
}

namespace {

void bench_dag(const Digraph& g, const BenchOptions& options, int t, BenchRow& row) {
  row.n = g.num_vertices();
  row.m = g.num_arcs();
  if (options.force_start) {
    throw Error(ErrorKind::kInvalidInstance, "--force-start applies to set-family instances only");
  }
  SearchOptions search = options.search;
  search.max_size = t;
  const auto start = std::chrono::steady_clock::now();
  const SolveResult solved = solve_mlsa(g, search);
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.alg_leaves = count_leaves(solved.arborescence);
  row.iterations = solved.stats.search.iterations;
  if (g.num_vertices() <= options.oracle_max_vertices) {
    row.opt_leaves = exact_mlsa(g, options.oracle_max_vertices).leaves;
  }
}

void bench_family(const BenchInstance& inst, const BenchOptions& options, int t, BenchRow& row) {
  const SetFamily& f = *inst.family;
  row.n = f.ground_size();
  row.m = f.num_maximal_sets();
  std::optional<Packing> start;
  if (options.force_start) {
    if (*options.force_start == "A") {
      if (!inst.a_solution) throw Error(ErrorKind::kInvalidInstance, "instance has no A-side");
      start = *inst.a_solution;
    } else {
      start = packing_from_json(read_json_file(*options.force_start), f.ground_size());
    }
  }
  SearchOptions search = options.search;
  search.max_size = t;
  const auto begin = std::chrono::steady_clock::now();
  const SearchResult result = run(f, search, std::move(start));
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
  row.alg_leaves = result.packing.weight() + 1;
  row.iterations = result.stats.iterations;
  try {
    row.opt_leaves = exact_packing(f, options.oracle_max_candidates).weight + 1;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kBudgetExceeded) throw;
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    for (int t : options.t_values) {
      BenchRow row;
      row.instance = inst.name;
      row.t = t;
      try {
        if (inst.dag) {
          bench_dag(*inst.dag, options, t, row);
        } else {
          bench_family(inst, options, t, row);
        }
      } catch (const Error& err) {
        row.alg_leaves.reset();
        row.opt_leaves.reset();
        row.failure = to_string(err.kind());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::optional<double> ratio_value(const BenchRow& row) {
  if (!row.failure.empty() || !row.alg_leaves || !row.opt_leaves) return std::nullopt;
  const long long alg = *row.alg_leaves - 1;
  const long long opt = *row.opt_leaves - 1;
  if (alg == 0) {
    return opt == 0 ? std::optional<double>(1.0) : std::nullopt;
  }
  return static_cast<double>(opt) / static_cast<double>(alg);
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

}  // namespace

std::string format_ratio(const BenchRow& row) {
  if (!row.failure.empty()) return "failed:" + row.failure;
  if (auto value = ratio_value(row)) return fixed(*value, 6);
  if (row.alg_leaves && row.opt_leaves) return "inf";
  return "";
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  std::optional<double> worst;
  bool unbounded = false;
  for (const auto& row : rows) {
    out << row.instance << ',' << row.n << ',' << row.m << ',' << row.t << ','
        << (row.alg_leaves ? std::to_string(*row.alg_leaves) : "") << ','
        << (row.opt_leaves ? std::to_string(*row.opt_leaves) : "") << ',' << format_ratio(row)
        << ',' << row.iterations << ',' << fixed(row.ms, 3) << '\n';
    if (auto value = ratio_value(row)) worst = std::max(worst.value_or(*value), *value);
    if (format_ratio(row) == "inf") unbounded = true;
  }
  if (rows.empty()) return;
  out << "summary,,,,,," << (unbounded ? "inf" : worst ? fixed(*worst, 6) : "") << ",,\n";
}

}  // namespace mlsa
