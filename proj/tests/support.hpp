#pragma once

// Random instance builders and brute-force references shared by the unit
// tests and the acceptance gate.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mlsa/digraph.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/packing.hpp"

namespace mlsa::testing {

// Hereditary family over [0, u) with maximal sets of size 2 or 3, resampled
// until the 2/3-subset count is at most max_candidates.
inline SetFamily random_small_family(std::mt19937_64& rng, int max_candidates, int max_ground = 9,
                                     int max_sets = 7) {
  std::uniform_int_distribution<int> ground_dist(4, max_ground);
  std::uniform_int_distribution<int> count_dist(1, max_sets);
  std::bernoulli_distribution triple(0.6);
  while (true) {
    const int u = ground_dist(rng);
    const int count = count_dist(rng);
    std::vector<ElementSet> raw;
    std::vector<Element> pool(u);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < count; ++i) {
      std::shuffle(pool.begin(), pool.end(), rng);
      raw.push_back(make_element_set({pool.begin(), pool.begin() + (triple(rng) ? 3 : 2)}));
    }
    SetFamily f = family_from_sets(u, raw);
    if (static_cast<int>(enumerate_candidates(f).size()) <= max_candidates) return f;
  }
}

// Greedy random packing of members of f: random maximal set, random subset
// of its free elements of size >= 2.
inline Packing random_packing(const SetFamily& f, std::mt19937_64& rng, int attempts = 12) {
  Packing a(f.ground_size());
  if (f.empty()) return a;
  std::uniform_int_distribution<int> pick(0, f.num_maximal_sets() - 1);
  for (int i = 0; i < attempts; ++i) {
    const ElementSet& s = f.maximal_sets()[pick(rng)];
    std::vector<Element> free;
    for (Element e : s) {
      if (a.owner(e) == kNoSet) free.push_back(e);
    }
    if (free.size() < 2) continue;
    std::shuffle(free.begin(), free.end(), rng);
    std::uniform_int_distribution<int> size(2, static_cast<int>(free.size()));
    free.resize(size(rng));
    a.add(make_element_set(std::move(free)));
  }
  return a;
}

// Random spanning arborescence on n vertices: a random order with the root
// first, every later vertex hanging off a random earlier one.
inline Arborescence random_arborescence(int n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> parent(n, kNoVertex);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> earlier(0, i - 1);
    parent[order[i]] = order[earlier(rng)];
  }
  return Arborescence::from_parents(std::move(parent));
}

// Maximum packing weight by plain recursion over all members of the
// hereditary closure (sizes >= 2): take the smallest free element, either
// leave it uncovered or cover it by some member through it.
inline long long brute_force_packing_weight(const SetFamily& f) {
  std::vector<ElementSet> members;
  for (const auto& s : f.maximal_sets()) {
    const int m = static_cast<int>(s.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      ElementSet sub;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1u) sub.push_back(s[i]);
      }
      members.push_back(sub);
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> used(f.ground_size(), false);
  std::function<long long(int)> best = [&](int from) -> long long {
    while (from < f.ground_size() && used[from]) ++from;
    if (from == f.ground_size()) return 0;
    used[from] = true;
    long long value = best(from + 1);
    for (const auto& s : members) {
      if (s.front() != from) continue;
      if (std::any_of(s.begin() + 1, s.end(), [&](Element e) { return used[e]; })) continue;
      for (Element e : s) used[e] = true;
      value = std::max(value, static_cast<long long>(s.size()) - 1 + best(from + 1));
      for (Element e : s) used[e] = false;
      used[from] = true;
    }
    used[from] = false;
    return value;
  };
  return best(0);
}

// Maximum leaf count of a spanning arborescence by trying every parent
// choice; only for tiny DAGs.
inline int brute_force_mlsa(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != g.root()) others.push_back(v);
  }
  std::vector<Vertex> parent(n, kNoVertex);
  int best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == others.size()) {
      std::vector<bool> has_child(n, false);
      for (Vertex v : others) has_child[parent[v]] = true;
      best = std::max(best, static_cast<int>(std::count(has_child.begin(), has_child.end(), false)));
      return;
    }
    for (Vertex p : g.in_neighbors(others[i])) {
      parent[others[i]] = p;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

}  // namespace mlsa::testing
