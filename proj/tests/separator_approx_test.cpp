#include "tgr/separator_approx.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tgr/core.hpp"
#include "tgr/oracles.hpp"
#include "test_util.hpp"

namespace tgr {
namespace {

using test::make_graph;

TEST(GreedyStrict, SingleCorridorTakesAllInternals) {
  const auto g = make_graph(5, 4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
  const Instance inst(g, 0, 4, 4, true);
  const auto r = greedy_strict_separator(inst);
  EXPECT_EQ(r.separator, (VertexSet{1, 2, 3}));
  EXPECT_EQ(r.lower_bound, 1);
}

TEST(GreedyStrict, NoWitnessMeansEmpty) {
  const auto g = make_graph(3, 2, {{0, 1, 1}, {1, 2, 1}});  // needs equal times
  const Instance inst(g, 0, 2, 2, true);
  const auto r = greedy_strict_separator(inst);
  EXPECT_TRUE(r.separator.empty());
  EXPECT_EQ(r.lower_bound, 0);
}

TEST(GreedyStrict, DirectEdgeIsInfeasible) {
  const auto g = make_graph(3, 2, {{0, 2, 1}, {0, 1, 1}, {1, 2, 2}});
  EXPECT_THROW(greedy_strict_separator(Instance(g, 0, 2, 2, true)), InfeasibleError);
}

TEST(GreedyStrict, RejectsNonStrictInstances) {
  const auto g = make_graph(3, 2, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_THROW(greedy_strict_separator(Instance(g, 0, 2, 2, false)), std::invalid_argument);
}

TEST(GreedyStrict, FactorAndSandwichAgainstOracle) {
  std::mt19937_64 rng(61);
  int nontrivial = 0;
  for (int it = 0; it < 200; ++it) {
    const auto inst = test::random_instance(rng, {.max_n = 9,
                                                  .max_tau = 6,
                                                  .edge_prob = 0.3,
                                                  .strict = true,
                                                  .allow_direct_sz = false,
                                                  .min_ell = 2});
    const auto r = greedy_strict_separator(inst);
    // feasibility
    EXPECT_FALSE(has_l_path(remove_vertices(inst.graph, r.separator), inst.s, inst.z, inst.ell,
                            true));
    const auto opt = exact_separator(inst);
    ASSERT_TRUE(opt.has_value());
    const int opt_size = static_cast<int>(opt->size());
    EXPECT_LE(r.lower_bound, opt_size);
    EXPECT_LE(opt_size, static_cast<int>(r.separator.size()));
    EXPECT_LE(static_cast<int>(r.separator.size()), (inst.ell - 1) * r.lower_bound);
    if (opt_size > 0) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 20);
}

TEST(GreedyStrict, WitnessesAreInternallyDisjoint) {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 60; ++it) {
    const auto inst = test::random_instance(rng, {.max_n = 9,
                                                  .max_tau = 6,
                                                  .edge_prob = 0.35,
                                                  .strict = true,
                                                  .allow_direct_sz = false,
                                                  .min_ell = 2});
    // replay the greedy loop, checking witness disjointness step by step
    TemporalGraph g = inst.graph;
    VertexSet seen;
    while (const auto p = find_l_path(g, inst.s, inst.z, inst.ell, true)) {
      const auto internals = p->internal_vertices();
      EXPECT_LE(static_cast<int>(internals.size()), inst.ell - 1);
      for (const VertexId v : internals) EXPECT_FALSE(contains(seen, v));
      seen = set_union(seen, internals);
      g = remove_vertices(g, internals);
    }
  }
}

}  // namespace
}  // namespace tgr
