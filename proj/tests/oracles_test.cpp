#include "tgr/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tgr/core.hpp"
#include "tgr/temporal_flow.hpp"
#include "test_util.hpp"

namespace tgr {
namespace {

using test::make_graph;

TEST(ExactSeparator, SingleCorridor) {
  const auto g = make_graph(4, 3, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
  const Instance inst(g, 0, 3, 3, false);
  const auto sep = exact_separator(inst);
  ASSERT_TRUE(sep.has_value());
  EXPECT_EQ(sep->size(), 1u);
}

TEST(ExactSeparator, DirectEdgeMeansAbsent) {
  const auto g = make_graph(3, 2, {{0, 2, 1}, {0, 1, 1}, {1, 2, 2}});
  const Instance inst(g, 0, 2, 2, false);
  EXPECT_EQ(exact_separator(inst), std::nullopt);
  EXPECT_EQ(naive_separator(inst), std::nullopt);
}

TEST(ExactSeparator, EmptySolutionWhenDeadlineUnreachable) {
  const auto g = make_graph(3, 5, {{0, 1, 1}, {1, 2, 5}});
  const Instance inst(g, 0, 2, 3, false);  // min travel time is 5
  EXPECT_EQ(exact_separator(inst), VertexSet{});
}

TEST(ExactSeparator, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 150; ++it) {
    for (const bool strict : {false, true}) {
      const auto inst = test::random_instance(
          rng, {.max_n = 8, .max_tau = 5, .edge_prob = 0.25, .strict = strict});
      const auto a = exact_separator(inst);
      const auto b = naive_separator(inst);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) {
        EXPECT_EQ(a->size(), b->size());
        EXPECT_FALSE(
            has_l_path(remove_vertices(inst.graph, *a), inst.s, inst.z, inst.ell, inst.strict));
      }
    }
  }
}

TEST(ExactSeparator, TooLargeGuard) {
  const auto g = make_graph(20, 1, {});
  const Instance inst(g, 0, 19, 1, false);
  EXPECT_THROW(exact_separator(inst, 16), TooLargeError);
  EXPECT_NO_THROW(exact_separator(inst, 20));
}

TEST(ExactCut, SingleEdge) {
  const auto g = make_graph(2, 1, {{0, 1, 1}});
  const Instance inst(g, 0, 1, 1, false);
  EXPECT_EQ(exact_cut(inst), EdgeSet{make_edge(0, 1, 1)});
}

TEST(ExactCut, AlreadySeparated) {
  const auto g = make_graph(4, 2, {{0, 1, 1}, {2, 3, 2}});
  const Instance inst(g, 0, 3, 2, false);
  EXPECT_EQ(exact_cut(inst), EdgeSet{});
}

TEST(ExactCut, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 120; ++it) {
    const auto inst = test::random_instance(rng, {.max_n = 7, .max_tau = 4, .edge_prob = 0.25});
    if (inst.graph.edges().size() > 14) continue;
    const auto a = exact_cut(inst);
    const auto b = naive_cut(inst);
    EXPECT_EQ(a.size(), b.size());
    EXPECT_FALSE(has_l_path(remove_edges(inst.graph, a), inst.s, inst.z, inst.ell, inst.strict));
  }
}

TEST(ExactCut, FullHorizonMatchesFlowValue) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 100; ++it) {
    auto inst = test::random_instance(rng, {.max_n = 8, .max_tau = 5, .edge_prob = 0.25});
    inst.ell = inst.graph.horizon();
    const auto cut = exact_cut(inst);
    const auto flow = min_temporal_cut(inst.graph, inst.s, inst.z);
    EXPECT_EQ(static_cast<int>(cut.size()), flow.value);
  }
}

TEST(ExactCut, RespectsDeletableFilter) {
  const auto g = make_graph(3, 2, {{0, 1, 1}, {1, 2, 2}});
  const Instance inst(g, 0, 2, 2, false);
  const EdgeSet deletable{make_edge(0, 1, 1)};
  EXPECT_EQ(exact_cut(inst, deletable), deletable);
  EXPECT_THROW(exact_cut(inst, EdgeSet{}), UncuttableError);
  EXPECT_THROW(naive_cut(inst, EdgeSet{}), UncuttableError);
}

TEST(ExactCut, IncumbentMustBeFeasible) {
  const auto g = make_graph(3, 2, {{0, 1, 1}, {1, 2, 2}});
  const Instance inst(g, 0, 2, 2, false);
  EXPECT_THROW(exact_cut(inst, std::nullopt, EdgeSet{}), std::invalid_argument);
}

TEST(Oracles, StrictSeparatorRespectsStrictness) {
  // non-strict corridor at a single timestamp is invisible to strict queries
  const auto g = make_graph(4, 2, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const Instance strict_inst(g, 0, 3, 2, true);
  const Instance plain_inst(g, 0, 3, 2, false);
  EXPECT_EQ(exact_separator(strict_inst), VertexSet{});
  EXPECT_EQ(exact_separator(plain_inst)->size(), 1u);
}

}  // namespace
}  // namespace tgr
