#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mlsa/error.hpp"
#include "mlsa/generators.hpp"
#include "mlsa/local_search.hpp"
#include "mlsa/oracles.hpp"
#include "mlsa/reduction.hpp"
#include "support.hpp"

namespace mlsa {
namespace {

using Sets = std::vector<ElementSet>;

TEST(ExactMlsa, Examples) {
  EXPECT_EQ(exact_mlsa(testing::path_graph()).leaves, 1);
  EXPECT_EQ(exact_mlsa(testing::star_graph(3)).leaves, 3);
  EXPECT_EQ(exact_mlsa(Digraph(1, 0, {})).leaves, 1);
}

TEST(ExactMlsa, ExampleGraph) {
  const Digraph g = testing::example_graph();
  const auto result = exact_mlsa(g);
  // The displayed tree has 6 leaves; moving {j, k} under f gains one.
  EXPECT_EQ(result.leaves, 7);
  EXPECT_GE(result.leaves, count_leaves(testing::example_tree()));
  EXPECT_FALSE(verify_arborescence(g, result.witness).has_value());
  EXPECT_EQ(count_leaves(result.witness), 7);
}

TEST(ExactMlsa, MatchesBruteForce) {
  for (int seed = 0; seed < 150; ++seed) {
    const Digraph g = gen_random_dag(1 + seed % 9, 0.15 + 0.1 * (seed % 6), 300 + seed);
    const auto result = exact_mlsa(g);
    EXPECT_EQ(result.leaves, testing::brute_force_mlsa(g)) << "seed " << seed;
    EXPECT_FALSE(verify_arborescence(g, result.witness).has_value());
    EXPECT_EQ(count_leaves(result.witness), result.leaves);
  }
}

TEST(ExactMlsa, Budget) {
  try {
    exact_mlsa(gen_random_dag(15, 0.3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  EXPECT_NO_THROW(exact_mlsa(gen_random_dag(15, 0.3, 1), 15));
}

TEST(ExactMlsa, RejectsCyclicGraph) {
  EXPECT_THROW(exact_mlsa(Digraph(3, 0, {{0, 1}, {1, 2}, {2, 1}})), Error);
}

TEST(ExactPacking, Examples) {
  EXPECT_EQ(exact_packing(family_from_sets(3, {{0, 1, 2}})).weight, 2);
  EXPECT_EQ(exact_packing(family_from_sets(3, {{0, 1}, {1, 2}})).weight, 1);
  EXPECT_EQ(exact_packing(family_from_sets(3, {{0}, {1}})).weight, 0);
  EXPECT_EQ(exact_packing(family_from_sets(0, {})).weight, 0);
}

TEST(ExactPacking, LowerBoundFamilyK4) {
  const LowerBoundInstance inst = gen_lower_bound(3, 1, 1);
  EXPECT_EQ(exact_packing(inst.family).weight, 8);
}

TEST(ExactPacking, MatchesBruteForce) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const SetFamily f = testing::random_small_family(rng, 40, 12, 9);
    const auto result = exact_packing(f);
    EXPECT_EQ(result.weight, testing::brute_force_packing_weight(f));
    EXPECT_EQ(result.witness.weight(), result.weight);
    EXPECT_FALSE(check_packing(f, result.witness).has_value());
  }
}

TEST(ExactPacking, LargeSetsMatchBruteForce) {
  for (int seed = 0; seed < 60; ++seed) {
    const SetFamily f = family_from_dag(gen_random_dag(3 + seed % 8, 0.4, 900 + seed));
    EXPECT_EQ(exact_packing(f).weight, testing::brute_force_packing_weight(f));
  }
}

TEST(ExactPacking, InvariantUnderInputOrder) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const SetFamily f = testing::random_small_family(rng, 40, 12, 9);
    Sets shuffled = f.maximal_sets();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(exact_packing(family_from_sets(f.ground_size(), shuffled)).weight,
              exact_packing(f).weight);
  }
}

TEST(ExactPacking, Budget) {
  try {
    exact_packing(family_from_sets(20, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

// A weight optimum can only be improved on the weight-2 count.
TEST(ExhaustiveNoImprovement, OptimumNeverGainsWeight) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const SetFamily f = testing::random_small_family(rng, 22);
    const auto best = exact_packing(f);
    for (int t : {1, 2, 3, 5}) {
      const auto check = exhaustive_no_improvement(f, best.witness, t);
      if (check.locally_optimal) continue;
      long long wx = 0;
      for (const auto& s : check.witness) wx += set_weight(s);
      long long wn = 0;
      for (int i : neighborhood(check.witness, best.witness)) wn += set_weight(best.witness.set(i));
      EXPECT_EQ(wx, wn);
    }
  }
}

TEST(ExhaustiveNoImprovement, EmptyPackingHasWitness) {
  const SetFamily f = family_from_sets(3, {{0, 1}, {1, 2}});
  const auto check = exhaustive_no_improvement(f, Packing(3), 1);
  EXPECT_FALSE(check.locally_optimal);
  ASSERT_EQ(check.witness.size(), 1u);
  EXPECT_EQ(check.witness.front().size(), 2u);
}

TEST(ExhaustiveNoImprovement, LowerBoundSideIsTightInT) {
  const LowerBoundInstance inst = gen_lower_bound(3, 1, 1);
  EXPECT_TRUE(exhaustive_no_improvement(inst.family, inst.a_solution, 1).locally_optimal);
  bool escaped = false;
  for (int t = 2; t <= 6 && !escaped; ++t) {
    escaped = !exhaustive_no_improvement(inst.family, inst.a_solution, t).locally_optimal;
  }
  EXPECT_TRUE(escaped);
}

TEST(ExhaustiveNoImprovement, AgreesWithSolverSearch) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const SetFamily f = testing::random_small_family(rng, 30, 10, 8);
    const Packing a = testing::random_packing(f, rng);
    for (int t : {1, 2, 3}) {
      EXPECT_EQ(exhaustive_no_improvement(f, a, t).locally_optimal,
                !find_improvement(f, a, t).has_value());
    }
  }
}

TEST(ExhaustiveNoImprovement, Budget) {
  const LowerBoundInstance inst = gen_lower_bound(3, 2, 1);
  try {
    exhaustive_no_improvement(inst.family, inst.a_solution, 2, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace mlsa
