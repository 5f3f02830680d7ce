#include "tgr/cut_approx.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tgr/core.hpp"
#include "tgr/oracles.hpp"
#include "test_util.hpp"

namespace tgr {
namespace {

using test::make_graph;

TEST(WindowPlan, MatchesStaggeredPattern) {
  const auto plan = make_window_plan(8, 2);
  EXPECT_EQ(plan.padded_tau, 8);
  ASSERT_EQ(plan.partition_one.size(), 2u);
  EXPECT_EQ(plan.partition_one[0], (TimeInterval{1, 4}));
  EXPECT_EQ(plan.partition_one[1], (TimeInterval{5, 8}));
  ASSERT_EQ(plan.partition_two.size(), 1u);
  EXPECT_EQ(plan.partition_two[0], (TimeInterval{2, 6}));
}

TEST(WindowPlan, PadsToMultipleOfTwoEll) {
  const auto plan = make_window_plan(9, 2);
  EXPECT_EQ(plan.padded_tau, 12);
  EXPECT_EQ(plan.partition_one.size(), 3u);
  EXPECT_EQ(plan.partition_two.size(), 2u);
  EXPECT_EQ(plan.partition_two[1], (TimeInterval{7, 10}));
}

TEST(WindowPlan, CoverageAndDisjointnessUpTo64) {
  for (int ell = 1; ell <= 64; ++ell) {
    for (Timestamp tau = 1; tau <= 64; ++tau) {
      const auto plan = make_window_plan(tau, ell);
      for (const auto* part : {&plan.partition_one, &plan.partition_two})
        for (size_t i = 0; i + 1 < part->size(); ++i)
          ASSERT_LT((*part)[i].t2, (*part)[i + 1].t1);
      for (Timestamp t = 1; t + ell - 1 <= plan.padded_tau; ++t) {
        bool covered = false;
        for (const auto* part : {&plan.partition_one, &plan.partition_two})
          for (const auto& iv : *part)
            covered |= (iv.t1 <= t && t + ell - 1 <= iv.t2);
        ASSERT_TRUE(covered) << "ell=" << ell << " tau=" << tau << " t=" << t;
      }
    }
  }
}

TEST(RecursiveWindowCut, GuardLeavesAccumulatorUntouched) {
  const auto g = make_graph(3, 6, {{0, 1, 2}, {1, 2, 3}});
  const auto acc = recursive_window_cut(g, 0, 2, 4, 2, 3, {});
  EXPECT_TRUE(acc.empty());  // r - l = 1 < ell - 1
}

TEST(RecursiveWindowCut, HorizonEqualToEllIsOneFullCut) {
  const auto g = make_graph(4, 4, {{0, 1, 1}, {1, 3, 2}, {0, 2, 2}, {2, 3, 4}});
  const auto acc = recursive_window_cut(g, 0, 3, 4, 1, 4, {});
  const auto direct = min_temporal_cut(g, 0, 3);
  EXPECT_EQ(static_cast<int>(acc.size()), direct.value);
  EXPECT_FALSE(has_l_path(remove_edges(g, acc), 0, 3, 4, false));
}

TEST(RecursiveWindowCut, RejectsBadBounds) {
  const auto g = make_graph(2, 4, {{0, 1, 1}});
  EXPECT_THROW(recursive_window_cut(g, 0, 1, 2, 0, 3, {}), std::invalid_argument);
  EXPECT_THROW(recursive_window_cut(g, 0, 1, 2, 3, 2, {}), std::invalid_argument);
  EXPECT_THROW(recursive_window_cut(g, 0, 1, 2, 1, 5, {}), std::invalid_argument);
}

TEST(ApproxCut, EdgelessGivesEmpty) {
  const auto g = make_graph(3, 4, {});
  const auto r = approx_cut(Instance(g, 0, 2, 2, false));
  EXPECT_TRUE(r.cut.empty());
}

TEST(ApproxCut, SingleEdgeMustBeCut) {
  const auto g = make_graph(2, 4, {{0, 1, 3}});
  const auto r = approx_cut(Instance(g, 0, 1, 2, false));
  EXPECT_EQ(r.cut, EdgeSet{make_edge(0, 1, 3)});
}

TEST(ApproxCut, RejectsStrictInstances) {
  const auto g = make_graph(2, 4, {{0, 1, 3}});
  EXPECT_THROW(approx_cut(Instance(g, 0, 1, 2, true)), std::invalid_argument);
}

TEST(ApproxCut, FeasibleFactorAndIdempotent) {
  std::mt19937_64 rng(71);
  int nontrivial = 0;
  for (int it = 0; it < 150; ++it) {
    auto inst = test::random_instance(rng, {.max_n = 8, .max_tau = 10, .edge_prob = 0.2});
    const int ells[] = {2, 4, 6};
    inst.ell = std::min<int>(ells[it % 3], inst.graph.horizon());
    if (inst.ell % 2 == 1) continue;
    const auto r = approx_cut(inst);
    EXPECT_TRUE(verify_cut(inst, r.cut));
    const auto opt = exact_cut(inst);
    EXPECT_LE(static_cast<double>(r.cut.size()),
              2.0 * std::log2(2.0 * inst.ell) * static_cast<double>(opt.size()) + 1e-9);
    if (!opt.empty()) ++nontrivial;
    // idempotence: the residual instance needs no further cutting
    const auto residual = inst.with_graph(remove_edges(inst.graph, r.cut));
    EXPECT_TRUE(approx_cut(residual).cut.empty());
  }
  EXPECT_GT(nontrivial, 20);
}

TEST(ApproxCut, OddDeadlineStillFeasible) {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 60; ++it) {
    auto inst = test::random_instance(rng, {.max_n = 7, .max_tau = 9, .edge_prob = 0.25});
    inst.ell = std::min(3, inst.graph.horizon());
    EXPECT_TRUE(verify_cut(inst, approx_cut(inst).cut));
  }
}

TEST(RecursiveWindowCut, LogTauFactorOverFullHorizon) {
  std::mt19937_64 rng(79);
  for (int it = 0; it < 120; ++it) {
    auto inst = test::random_instance(
        rng, {.max_n = 8, .max_tau = 12, .edge_prob = 0.2, .min_ell = 2});
    inst.ell = inst.ell - (inst.ell % 2);  // even deadline
    if (inst.ell < 2) continue;
    const auto acc =
        recursive_window_cut(inst.graph, inst.s, inst.z, inst.ell, 1, inst.graph.horizon(), {});
    EXPECT_TRUE(verify_cut(inst, acc));
    const auto opt = exact_cut(inst);
    EXPECT_LE(static_cast<double>(acc.size()),
              std::log2(static_cast<double>(inst.graph.horizon())) *
                      static_cast<double>(opt.size()) +
                  1e-9);
  }
}

TEST(CrossWindowPaths, SurvivorsOnOppositeSidesShareNoEdge) {
  std::mt19937_64 rng(83);
  for (int it = 0; it < 80; ++it) {
    const auto inst = test::random_instance(rng, {.max_n = 8, .max_tau = 8, .edge_prob = 0.3});
    const auto& g = inst.graph;
    const int ell = inst.ell;
    for (Timestamp t = 2; t + ell - 1 <= g.horizon() - 1; ++t) {
      const auto cut = min_temporal_cut(restrict_interval(g, {t, t + ell - 1}), inst.s, inst.z).cut;
      const auto residual = remove_edges(g, cut);
      for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
          const auto later = restrict_interval(residual, {t + i, t + ell + i - 1});
          const auto earlier = restrict_interval(residual, {t - j, t - j + ell - 1});
          const auto p = find_l_path(later, inst.s, inst.z, g.horizon(), false);
          const auto q = find_l_path(earlier, inst.s, inst.z, g.horizon(), false);
          if (!p || !q) continue;
          for (const auto& e : p->edge_set()) EXPECT_FALSE(contains(q->edge_set(), e));
        }
      }
    }
  }
}

TEST(ExactCutEll1, PerSnapshotCorridors) {
  const auto g = make_graph(4, 2, {{0, 1, 1}, {1, 3, 1}, {0, 2, 2}, {2, 3, 2}});
  const Instance inst(g, 0, 3, 1, false);
  const auto cut = exact_cut_ell1(inst);
  EXPECT_EQ(cut.size(), 2u);
  EXPECT_TRUE(verify_cut(inst, cut));
}

TEST(ExactCutEll1, DisconnectedSnapshotsNeedNothing) {
  const auto g = make_graph(4, 2, {{0, 1, 1}, {2, 3, 2}});
  EXPECT_TRUE(exact_cut_ell1(Instance(g, 0, 3, 1, false)).empty());
}

TEST(ExactCutEll1, WrongDeadlineRejected) {
  const auto g = make_graph(2, 3, {{0, 1, 1}});
  EXPECT_THROW(exact_cut_ell1(Instance(g, 0, 1, 2, false)), WrongDeadlineError);
}

TEST(ExactCutEll1, MatchesOracle) {
  std::mt19937_64 rng(89);
  for (int it = 0; it < 100; ++it) {
    auto inst = test::random_instance(rng, {.max_n = 7, .max_tau = 4, .edge_prob = 0.3});
    inst.ell = 1;
    const auto mine = exact_cut_ell1(inst);
    const auto opt = exact_cut(inst);
    EXPECT_EQ(mine.size(), opt.size());
    EXPECT_TRUE(verify_cut(inst, mine));
  }
}

TEST(VerifyCut, TrivialCases) {
  const auto g = make_graph(3, 2, {{0, 1, 1}, {1, 2, 2}});
  const Instance inst(g, 0, 2, 2, false);
  EXPECT_TRUE(verify_cut(inst, g.edges()));
  EXPECT_FALSE(verify_cut(inst, {}));
}

TEST(VerifyCut, AgreesWithEnumeration) {
  std::mt19937_64 rng(97);
  for (int it = 0; it < 100; ++it) {
    const auto inst = test::random_instance(rng, {.max_n = 7, .max_tau = 5, .edge_prob = 0.25});
    const auto& edges = inst.graph.edges();
    EdgeSet cut;
    for (const auto& e : edges)
      if (rng() % 2) cut.push_back(e);
    EXPECT_EQ(verify_cut(inst, cut),
              !test::brute_has_l_path(remove_edges(inst.graph, cut), inst.s, inst.z, inst.ell,
                                      inst.strict));
  }
}

}  // namespace
}  // namespace tgr
