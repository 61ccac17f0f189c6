#include <gtest/gtest.h>

#include <random>

#include "mlsa/error.hpp"
#include "mlsa/generators.hpp"
#include "mlsa/json_io.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/oracles.hpp"

namespace mlsa {
namespace {

bool is_regular(const UndirectedGraph& g, int k) {
  const auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k; });
}

bool is_simple(const UndirectedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

TEST(Girth, KnownGraphs) {
  EXPECT_FALSE(girth({3, {{0, 1}, {1, 2}}}).has_value());
  EXPECT_EQ(girth({3, {{0, 1}, {1, 2}, {2, 0}}}), 3);
  EXPECT_EQ(girth({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}), 4);
  EXPECT_EQ(girth({2, {{0, 1}, {0, 1}}}), 2);
  EXPECT_EQ(girth({1, {{0, 0}}}), 1);
  // Triangle plus pendant path plus a disjoint 5-cycle.
  EXPECT_EQ(girth({9, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}}}), 3);
}

TEST(GenRandomDag, SingleVertex) {
  const Digraph g = gen_random_dag(1, 0.5, 1);
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_arcs(), 0);
}

TEST(GenRandomDag, FullDensityIsTransitiveTournament) {
  const Digraph g = gen_random_dag(5, 1.0, 3);
  EXPECT_EQ(g.num_arcs(), 10);
  EXPECT_EQ(g.out_neighbors(g.root()).size(), 4u);
  EXPECT_FALSE(validate_instance(g).has_value());
}

TEST(GenRandomDag, AlwaysValidAndDeterministic) {
  EXPECT_FALSE(validate_instance(gen_random_dag(12, 0.3, 7)).has_value());
  for (int seed = 0; seed < 200; ++seed) {
    const Digraph g = gen_random_dag(1 + seed % 40, 0.01 + 0.05 * (seed % 20), seed);
    EXPECT_FALSE(validate_instance(g).has_value()) << "seed " << seed;
    EXPECT_EQ(g.arcs(), gen_random_dag(1 + seed % 40, 0.01 + 0.05 * (seed % 20), seed).arcs());
  }
}

TEST(GenRandomDag, RejectsBadParameters) {
  EXPECT_THROW(gen_random_dag(0, 0.5, 1), Error);
  EXPECT_THROW(gen_random_dag(3, 0.0, 1), Error);
  EXPECT_THROW(gen_random_dag(3, 1.5, 1), Error);
}

TEST(GenRegularHighGirth, LibraryGraphs) {
  const auto k4 = gen_regular_high_girth(3, 3, 1, 1);
  EXPECT_EQ(k4.source, "K4");
  EXPECT_EQ(k4.graph.num_vertices, 4);

  const auto petersen = gen_regular_high_girth(3, 5, 1, 1);
  EXPECT_EQ(petersen.source, "Petersen");
  EXPECT_EQ(petersen.graph.num_vertices, 10);
  EXPECT_EQ(girth(petersen.graph), 5);
  EXPECT_TRUE(is_regular(petersen.graph, 3));

  const auto heawood = gen_regular_high_girth(3, 6, 1, 1);
  EXPECT_EQ(heawood.source, "Heawood");
  EXPECT_EQ(heawood.graph.num_vertices, 14);
  EXPECT_EQ(girth(heawood.graph), 6);
  EXPECT_TRUE(is_regular(heawood.graph, 3));

  const auto k33 = gen_regular_high_girth(3, 4, 1, 1);
  EXPECT_EQ(k33.source, "K3,3");
  EXPECT_EQ(girth(k33.graph), 4);
}

TEST(GenRegularHighGirth, RandomPairing) {
  for (auto [k, g] : std::vector<std::pair<int, int>>{{3, 7}, {4, 5}, {3, 5}, {5, 4}}) {
    const auto h = gen_regular_high_girth(k, g, 30, 17);
    EXPECT_GE(h.graph.num_vertices, 30);
    EXPECT_TRUE(is_regular(h.graph, k));
    EXPECT_TRUE(is_simple(h.graph));
    EXPECT_GE(girth(h.graph).value_or(1000), g);
  }
}

TEST(GenRegularHighGirth, TimeoutWhenRetriesRunOut) {
  // The smallest cubic graph of girth 12 has 126 vertices and random
  // pairing essentially never hits it.
  try {
    gen_regular_high_girth(3, 12, 1, 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGenerationTimeout);
  }
}

TEST(GenRegularHighGirth, TimeoutWhenTooLarge) {
  try {
    gen_regular_high_girth(3, 40, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGenerationTimeout);
  }
}

TEST(IncidenceGraph, DoublesGirth) {
  const auto petersen = gen_regular_high_girth(3, 5, 1, 1).graph;
  const UndirectedGraph g = incidence_graph(petersen);
  EXPECT_EQ(g.num_vertices, 25);
  EXPECT_EQ(g.edges.size(), 30u);
  EXPECT_EQ(girth(g), 10);
}

TEST(GenLowerBound, K4Instance) {
  const LowerBoundInstance inst = gen_lower_bound(3, 1, 1);
  EXPECT_EQ(inst.base_source, "K4");
  EXPECT_EQ(inst.family.ground_size(), 12);
  EXPECT_EQ(inst.a_solution.weight(), 6);
  EXPECT_EQ(inst.b_solution.weight(), 8);
  EXPECT_TRUE(inst.certified);
  EXPECT_FALSE(check_lower_bound_instance(inst).has_value());
}

TEST(GenLowerBound, RatioForLargerK) {
  for (int k : {4, 5}) {
    const LowerBoundInstance inst = gen_lower_bound(k, 1, 1);
    EXPECT_EQ(inst.b_solution.weight() * k, (2 * k - 2) * inst.a_solution.weight());
    EXPECT_FALSE(check_lower_bound_instance(inst).has_value());
    EXPECT_TRUE(inst.certified);
  }
  const LowerBoundInstance k4 = gen_lower_bound(4, 1, 1);
  EXPECT_EQ(2 * k4.b_solution.weight(), 3 * k4.a_solution.weight());
}

TEST(GenLowerBound, HeawoodBaseCertifiedForT2) {
  const LowerBoundInstance inst = gen_lower_bound(3, 2, 1, 6);
  EXPECT_EQ(inst.base_source, "Heawood");
  EXPECT_EQ(inst.girth, 12);
  EXPECT_TRUE(inst.certified);
  EXPECT_TRUE(exhaustive_no_improvement(inst.family, inst.a_solution, 2).locally_optimal);
  EXPECT_FALSE(check_lower_bound_instance(inst).has_value());
}

TEST(GenLowerBound, DefaultBaseForT2) {
  const LowerBoundInstance inst = gen_lower_bound(3, 2, 1);
  EXPECT_EQ(inst.base_source, "Petersen");
  EXPECT_GE(inst.girth, 7);
  EXPECT_TRUE(inst.certified);
}

TEST(GenLowerBound, GirthGrowsWithT) {
  const LowerBoundInstance inst = gen_lower_bound(3, 3, 5);
  EXPECT_FALSE(check_lower_bound_instance(inst).has_value());
  EXPECT_GE(inst.girth, 10);
  EXPECT_TRUE(is_regular(inst.base, 3));
}

TEST(GenLowerBound, SolutionsAreVertexStars) {
  const LowerBoundInstance inst = gen_lower_bound(3, 1, 1);
  const int nh = inst.base.num_vertices;
  EXPECT_EQ(inst.b_solution.size(), nh);
  EXPECT_EQ(inst.a_solution.size(), static_cast<int>(inst.base.edges.size()));
  for (const auto& s : inst.a_solution.sets()) {
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0] / 2, s[1] / 2);
  }
  for (const auto& s : inst.b_solution.sets()) EXPECT_EQ(s.size(), 3u);
}

// Random disjoint X of at most t members of the family, none of them in A,
// always loses weight against N(X, A).
TEST(GenLowerBound, ForestArgument) {
  std::mt19937_64 rng(61);
  for (auto [k, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}, {3, 3}}) {
    const LowerBoundInstance inst = gen_lower_bound(k, t, 3);
    const auto members = oracle_candidates(inst.family, 100'000);
    std::vector<ElementSet> outside;
    const auto a_sets = inst.a_solution.canonical_sets();
    for (const auto& s : members) {
      if (!std::binary_search(a_sets.begin(), a_sets.end(), s)) outside.push_back(s);
    }
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    std::uniform_int_distribution<int> size(1, t);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<ElementSet> x;
      std::vector<bool> used(inst.family.ground_size(), false);
      const int want = size(rng);
      for (int attempt = 0; attempt < 50 && static_cast<int>(x.size()) < want; ++attempt) {
        const auto& s = outside[pick(rng)];
        if (std::any_of(s.begin(), s.end(), [&](Element e) { return used[e]; })) continue;
        for (Element e : s) used[e] = true;
        x.push_back(s);
      }
      long long wx = 0;
      for (const auto& s : x) wx += set_weight(s);
      long long wn = 0;
      for (int i : neighborhood(x, inst.a_solution)) wn += set_weight(inst.a_solution.set(i));
      EXPECT_GT(wn, wx) << "k=" << k << " t=" << t;
    }
  }
}

TEST(GenLowerBound, JsonRoundTrip) {
  const LowerBoundInstance inst = gen_lower_bound(3, 2, 1);
  const LowerBoundInstance back = lower_bound_from_json(lower_bound_to_json(inst));
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.t, 2);
  EXPECT_EQ(back.girth, inst.girth);
  EXPECT_EQ(back.certified, inst.certified);
  EXPECT_EQ(back.base_source, inst.base_source);
  EXPECT_EQ(back.base.edges, inst.base.edges);
  EXPECT_EQ(back.family.maximal_sets(), inst.family.maximal_sets());
  EXPECT_EQ(back.a_solution.canonical_sets(), inst.a_solution.canonical_sets());
  EXPECT_EQ(back.b_solution.canonical_sets(), inst.b_solution.canonical_sets());
}

TEST(GenLowerBound, RejectsBadParameters) {
  EXPECT_THROW(gen_lower_bound(2, 1, 1), Error);
  EXPECT_THROW(gen_lower_bound(3, 0, 1), Error);
}

}  // namespace
}  // namespace mlsa
