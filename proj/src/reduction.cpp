#include "mlsa/reduction.hpp"

#include <algorithm>

#include "mlsa/error.hpp"

namespace mlsa {

SetFamily family_from_dag(const Digraph& g) {
  std::vector<ElementSet> raw;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!g.out_neighbors(v).empty()) raw.push_back(make_element_set(g.out_neighbors(v)));
  }
  return family_from_sets(g.num_vertices(), std::move(raw));
}

Packing arborescence_to_packing(const Digraph& g, const Arborescence& t) {
  Packing a(g.num_vertices());
  for (auto& kids : t.children()) {
    if (kids.size() >= 2) a.add(make_element_set(std::move(kids)));
  }
  return a;
}

Arborescence packing_to_arborescence(const Digraph& g, const Packing& a) {
  const int n = g.num_vertices();
  std::vector<Vertex> parent(n, kNoVertex);
  for (const auto& s : a.sets()) {
    Vertex anchor = kNoVertex;
    for (Vertex v = 0; v < n && anchor == kNoVertex; ++v) {
      const auto& out = g.out_neighbors(v);
      if (std::includes(out.begin(), out.end(), s.begin(), s.end())) anchor = v;
    }
    if (anchor == kNoVertex) {
      throw Error(ErrorKind::kInfeasible, "packed set fits no out-neighborhood");
    }
    for (Element w : s) parent[w] = anchor;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == g.root() || parent[v] != kNoVertex) continue;
    if (g.in_neighbors(v).empty()) {
      throw Error(ErrorKind::kInvalidInstance, "vertex " + std::to_string(v) + " has no entering arc");
    }
    parent[v] = g.in_neighbors(v).front();
  }
  if (parent[g.root()] != kNoVertex) {
    throw Error(ErrorKind::kInfeasible, "packing covers the root");
  }
  return Arborescence::from_parents(std::move(parent));
}

SplitResult split_by_size(const SetFamily& f, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidInstance, "split_by_size needs k >= 1");
  SplitResult result{Packing(f.ground_size()), {}, {}};
  std::vector<bool> covered(f.ground_size(), false);
  for (const auto& s : f.maximal_sets()) {
    ElementSet rest;
    for (Element e : s) {
      if (!covered[e]) rest.push_back(e);
    }
    if (static_cast<int>(rest.size()) < k + 1) continue;
    for (Element e : rest) covered[e] = true;
    result.large.add(std::move(rest));
  }
  std::vector<ElementSet> residual;
  for (const auto& s : f.maximal_sets()) {
    ElementSet rest;
    for (Element e : s) {
      if (!covered[e]) rest.push_back(e);
    }
    if (!rest.empty()) residual.push_back(std::move(rest));
  }
  result.residual = family_from_sets(f.ground_size(), std::move(residual));
  for (Element e = 0; e < f.ground_size(); ++e) {
    if (covered[e]) result.covered.push_back(e);
  }
  return result;
}

Packing combine(const Packing& large, const Packing& residual_solution) {
  Packing merged = large;
  for (const auto& s : residual_solution.sets()) merged.add(s);
  return merged;
}

SolveResult solve_mlsa(const Digraph& g, const SearchOptions& options) {
  if (auto violation = validate_instance(g)) {
    throw Error(ErrorKind::kInvalidInstance, "invalid instance: " + violation->describe());
  }
  const SetFamily family = family_from_dag(g);
  const SplitResult split = split_by_size(family, 3);
  SearchResult search = run(split.residual, options);
  const Packing packing = combine(split.large, search.packing);

  SolveResult result{packing_to_arborescence(g, packing), {}};
  result.stats.large_weight = split.large.weight();
  result.stats.residual_weight = search.packing.weight();
  result.stats.num_maximal_sets = family.num_maximal_sets();
  result.stats.residual_maximal_sets = split.residual.num_maximal_sets();
  result.stats.search = search.stats;
  return result;
}

}  // namespace mlsa
