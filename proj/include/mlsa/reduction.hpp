#pragma once

#include "mlsa/digraph.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/packing.hpp"

namespace mlsa {

// Family whose maximal sets are the maximal out-neighborhoods of g, over
// ground set V(g).
SetFamily family_from_dag(const Digraph& g);

// {Γ⁺_T(v)} without singletons; weight equals count_leaves(t) - 1.
Packing arborescence_to_packing(const Digraph& g, const Arborescence& t);

// Each packed set hangs off the smallest vertex whose out-neighborhood
// contains it; every other non-root vertex takes its smallest in-neighbor.
// Throws kInfeasible if a set fits no out-neighborhood.
Arborescence packing_to_arborescence(const Digraph& g, const Packing& a);

struct SplitResult {
  Packing large;        // sets of size >= k+1, disjoint, union = covered
  SetFamily residual;   // maximal sets of {s \ covered}, all of size <= k
  ElementSet covered;
};

// Greedy pass over the maximal sets in family order; the result depends on
// that order.
SplitResult split_by_size(const SetFamily& f, int k);

// Disjoint union; throws kOverlap.
Packing combine(const Packing& large, const Packing& residual_solution);

struct SolveStats {
  long long large_weight = 0;
  long long residual_weight = 0;
  int num_maximal_sets = 0;
  int residual_maximal_sets = 0;
  SearchStats search;
};

struct SolveResult {
  Arborescence arborescence;
  SolveStats stats;
};

// family_from_dag -> split_by_size(k = 3) -> local search -> combine ->
// packing_to_arborescence. Throws kInvalidInstance for invalid inputs.
SolveResult solve_mlsa(const Digraph& g, const SearchOptions& options = {});

}  // namespace mlsa
