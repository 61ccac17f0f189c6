#pragma once

#include <vector>

#include "mlsa/digraph.hpp"

namespace mlsa::testing {

// The 12-vertex example graph: r=0, a=1, ..., k=11.
enum : Vertex { R, A, B, C, D, E, F, G, H, I, J, K };

// Bold arcs: the displayed spanning arborescence.
inline std::vector<Arc> example_tree_arcs() {
  return {{R, A}, {R, B}, {A, C}, {A, D}, {A, E}, {B, F}, {B, G}, {C, H}, {C, I}, {E, J}, {F, K}};
}

// Gray arcs: the rest of the graph.
inline std::vector<Arc> example_extra_arcs() {
  return {{A, B}, {D, B}, {D, K}, {I, H}, {J, I}, {D, H},
          {K, J}, {F, J}, {K, I}, {F, G}, {G, K}, {R, G}};
}

inline Digraph example_graph() {
  auto arcs = example_tree_arcs();
  for (const Arc& arc : example_extra_arcs()) arcs.push_back(arc);
  return Digraph(12, R, arcs);
}

inline Arborescence example_tree() {
  std::vector<Vertex> parent(12, kNoVertex);
  for (const Arc& arc : example_tree_arcs()) parent[arc.head] = arc.tail;
  return Arborescence::from_parents(parent);
}

inline Digraph path_graph() { return Digraph(3, 0, {{0, 1}, {1, 2}}); }

inline Digraph star_graph(int leaves) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= leaves; ++v) arcs.push_back({0, v});
  return Digraph(leaves + 1, 0, arcs);
}

}  // namespace mlsa::testing
