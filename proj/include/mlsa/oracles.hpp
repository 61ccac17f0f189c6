#pragma once

#include <vector>

#include "mlsa/digraph.hpp"
#include "mlsa/packing.hpp"

namespace mlsa {

// Ground-truth solvers for desk-sized instances. They deliberately share no
// algorithmic code with the solver pipeline.

struct ExactMlsaResult {
  int leaves = 0;
  Arborescence witness;
};

// Branch and bound over parent choices in topological order. Throws
// kBudgetExceeded when g has more than max_vertices vertices and
// kInvalidInstance when g is not a rooted DAG.
ExactMlsaResult exact_mlsa(const Digraph& g, int max_vertices = 14);

struct ExactPackingResult {
  long long weight = 0;
  Packing witness;
  int num_candidates = 0;
};

// Maximum-weight disjoint collection of nonempty subsets of the maximal
// sets (sets of size >= 2 materialized). Throws kBudgetExceeded above
// max_candidates.
ExactPackingResult exact_packing(const SetFamily& f, int max_candidates = 10'000);

struct LocalOptimalityCheck {
  bool locally_optimal = true;
  std::vector<ElementSet> witness;  // an improvement when !locally_optimal
  long long nodes = 0;
};

// Enumerates every disjoint collection of at most max_size members of f
// and tests the improvement predicate against a. Throws kBudgetExceeded
// past max_nodes enumeration steps.
LocalOptimalityCheck exhaustive_no_improvement(const SetFamily& f, const Packing& a, int max_size,
                                               long long max_nodes = 50'000'000);

// Materialized members of f with at least two elements, any cardinality.
std::vector<ElementSet> oracle_candidates(const SetFamily& f, int max_candidates);

}  // namespace mlsa
