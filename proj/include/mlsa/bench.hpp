#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlsa/digraph.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/packing.hpp"

namespace mlsa {

// Either a DAG (solved end to end) or a set family (local search only; leaf
// columns then report packing weight + 1).
struct BenchInstance {
  std::string name;
  std::optional<Digraph> dag;
  std::optional<SetFamily> family;
  std::optional<Packing> a_solution;  // present for lower-bound files
};

struct BenchOptions {
  std::vector<int> t_values{10};
  SearchOptions search;
  // Path of a packing JSON, or "A" for a lower-bound file's A-side; family
  // instances only.
  std::optional<std::string> force_start;
  int oracle_max_vertices = 14;
  int oracle_max_candidates = 10'000;
};

struct BenchRow {
  std::string instance;
  int n = 0;
  int m = 0;
  int t = 0;
  std::optional<long long> alg_leaves;
  std::optional<long long> opt_leaves;
  long long iterations = 0;
  double ms = 0.0;
  std::string failure;  // nonempty when the instance failed
};

inline constexpr const char* kBenchCsvHeader = "instance,n,m,t,alg_leaves,opt_leaves,ratio,iterations,ms";

// .dag files, family JSON and lower-bound JSON in name order; other files
// are skipped.
std::vector<BenchInstance> load_bench_dir(const std::string& dir);

// count DAGs with n drawn from [2, n_max]; instance i uses seed + i.
std::vector<BenchInstance> random_bench_instances(int count, int n_max, double density,
                                                  std::uint64_t seed);

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& options);

// (opt - 1) / (alg - 1) formatted with six decimals; "inf" if alg has no
// weight but opt does; empty when opt is unknown.
std::string format_ratio(const BenchRow& row);

// Header, one row per entry and a summary row with the maximum ratio when
// rows is nonempty.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mlsa
