#pragma once

#include "tgr/core.hpp"
#include "tgr/path_query.hpp"
#include "tgr/temporal_flow.hpp"

namespace tgr {

/// The two staggered interval partitions of the padded horizon.  Every
/// length-ell window of [1, padded_tau] lies inside some listed interval, and
/// intervals within one partition are pairwise disjoint.
struct WindowPlan {
  std::vector<TimeInterval> partition_one;  // [1,2l], [2l+1,4l], ...
  std::vector<TimeInterval> partition_two;  // [l,3l], [3l+1,5l], ...
  Timestamp padded_tau = 0;
};

inline WindowPlan make_window_plan(Timestamp tau, int ell) {
  if (ell < 1) throw std::invalid_argument("deadline must be positive");
  const Timestamp block = 2 * ell;
  const Timestamp padded = ((tau + block - 1) / block) * block;
  WindowPlan plan;
  plan.padded_tau = padded;
  for (Timestamp a = 1; a + block - 1 <= padded; a += block)
    plan.partition_one.push_back({a, a + block - 1});
  if (padded >= 2 * block) {
    plan.partition_two.push_back({ell, 3 * ell});
    for (Timestamp a = 3 * ell + 1; a + block - 1 <= padded - ell; a += block)
      plan.partition_two.push_back({a, a + block - 1});
  }
  return plan;
}

/// Recursive windowed cut: picks the middle length-ell window of [l, r], cuts
/// it completely with a minimum temporal cut (ignoring edges already in acc),
/// and recurses on the two overlapping halves.  On return, acc cuts every
/// temporal s-z path whose timestamps fit in a length-ell subinterval of
/// [l, r].  The recursion depth is logarithmic in the window count.
inline EdgeSet recursive_window_cut(const TemporalGraph& g, VertexId s, VertexId z, int ell,
                                    Timestamp l, Timestamp r, EdgeSet acc = {}) {
  if (ell < 1) throw std::invalid_argument("deadline must be positive");
  if (l < 1 || l > r || r > g.horizon())
    throw std::invalid_argument("window bounds must satisfy 1 <= l <= r <= tau");
  if (r - l < ell - 1) return acc;
  const Timestamp t = (l + r + 1) / 2;
  // anchor of the cut window, kept inside the valid window-start range
  Timestamp x0 = t - (ell + 1) / 2;
  x0 = std::max(l, std::min(x0, r - ell + 1));
  const TimeInterval window{x0, x0 + ell - 1};
  const auto cut = min_temporal_cut(restrict_interval(remove_edges(g, acc), window), s, z).cut;
  acc = set_union(acc, cut);
  if (x0 + ell - 2 >= l) acc = recursive_window_cut(g, s, z, ell, l, x0 + ell - 2, std::move(acc));
  if (x0 + 1 <= r) acc = recursive_window_cut(g, s, z, ell, x0 + 1, r, std::move(acc));
  return acc;
}

struct ApproxCutResult {
  EdgeSet cut;
  WindowPlan plan;
};

/// 2*log2(2*ell)-approximation for the ell-bounded temporal cut: pads the
/// horizon to a multiple of 2*ell, then runs the recursive windowed cut over
/// every interval of both partitions, accumulating cuts globally.
inline ApproxCutResult approx_cut(const Instance& inst) {
  if (inst.strict)
    throw std::invalid_argument("the windowed cut approximation handles non-strict instances");
  ApproxCutResult result;
  result.plan = make_window_plan(inst.graph.horizon(), inst.ell);
  const TemporalGraph padded = inst.graph.with_horizon(result.plan.padded_tau);
  for (const auto* part : {&result.plan.partition_one, &result.plan.partition_two})
    for (const auto& iv : *part)
      result.cut =
          recursive_window_cut(padded, inst.s, inst.z, inst.ell, iv.t1, iv.t2, result.cut);
  return result;
}

/// Exact minimum cut for deadline 1: snapshots at different times share no
/// temporal edges, so the union of per-snapshot minimum cuts is optimal.
inline EdgeSet exact_cut_ell1(const Instance& inst) {
  if (inst.ell != 1) throw WrongDeadlineError("exact_cut_ell1 requires deadline 1");
  if (inst.strict)
    throw std::invalid_argument("exact_cut_ell1 handles non-strict instances");
  EdgeSet cut;
  for (Timestamp t = 1; t <= inst.graph.horizon(); ++t) {
    const auto snapshot = restrict_interval(inst.graph, {t, t});
    cut = set_union(cut, min_temporal_cut(snapshot, inst.s, inst.z).cut);
  }
  return cut;
}

/// True iff no (strict, per the instance flag) ell-temporal s-z path survives
/// the removal of `cut`.
inline bool verify_cut(const Instance& inst, const EdgeSet& cut) {
  return !has_l_path(remove_edges(inst.graph, cut), inst.s, inst.z, inst.ell, inst.strict);
}

}  // namespace tgr
