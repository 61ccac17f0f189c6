#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlsa/digraph.hpp"
#include "mlsa/packing.hpp"

namespace mlsa {

struct UndirectedGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
};

// Length of a shortest cycle, or nullopt for a forest. BFS from every
// vertex, O(V * E).
std::optional<int> girth(const UndirectedGraph& g);

// Random topological order with the root first, forward arcs kept with
// probability `density`, and an arc from a random earlier vertex added to
// every vertex left without an entering arc.
Digraph gen_random_dag(int n, double density, std::uint64_t seed);

struct RegularGraph {
  UndirectedGraph graph;
  std::string source;  // library name or "random"
};

// Simple k-regular graph with girth >= girth_min and at least n_min
// vertices: the smallest fitting library graph (K_{k+1}, K_{k,k}, Petersen,
// Heawood) or else randomized edge-by-edge pairing that rejects short
// cycles. Throws kGenerationTimeout when the retry budget runs out.
RegularGraph gen_regular_high_girth(int k, int girth_min, int n_min, std::uint64_t seed,
                                    int max_attempts = 2000);

// Vertex-edge incidence graph: vertices of h first, then one vertex per
// edge of h.
UndirectedGraph incidence_graph(const UndirectedGraph& h);

struct LowerBoundInstance {
  SetFamily family;
  Packing a_solution;
  Packing b_solution;
  int k = 0;
  int t = 0;
  int girth = 0;  // of the incidence graph
  bool certified = false;
  std::string base_source;
  UndirectedGraph base;
};

// Hereditary k-set packing instance on the incidence graph of a k-regular
// base graph H: ground set = incidences, maximal sets = δ(v).
// a_solution packs δ(e) for edges e of H, b_solution packs δ(v) for the
// vertices of H. The base girth defaults to ceil((k*t+1)/2) + 1.
LowerBoundInstance gen_lower_bound(int k, int t, std::uint64_t seed,
                                   std::optional<int> base_girth = std::nullopt,
                                   long long certify_budget = 20'000'000);

// Checks the structural claims: both solutions feasible,
// k * w(B) == (2k - 2) * w(A), incidence girth >= k*t + 1.
std::optional<std::string> check_lower_bound_instance(const LowerBoundInstance& inst);

}  // namespace mlsa
