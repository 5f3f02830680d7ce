#pragma once

#include "tgr/core.hpp"
#include "tgr/oracles.hpp"
#include "tgr/path_query.hpp"

namespace tgr {

struct GreedyStrictResult {
  VertexSet separator;
  int lower_bound = 0;  // number of iterations; the witnesses are internally
                        // vertex-disjoint, so the optimum is at least this
};

/// Greedy (ell-1)-approximation for the strict separator problem: repeatedly
/// take a strict ell-temporal s-z witness path, delete all of its internal
/// vertices, and count iterations.  A strict witness has at most ell-1
/// internal vertices, hence the factor.
///
/// Non-strict instances are rejected: a non-strict window can chain
/// unboundedly many same-time hops, so the witness-size bound fails.
inline GreedyStrictResult greedy_strict_separator(const Instance& inst) {
  if (!inst.strict)
    throw std::invalid_argument("greedy separator is defined for strict instances only");
  if (detail::has_direct_edge(inst))
    throw InfeasibleError("a direct s-z temporal edge admits no separator");
  GreedyStrictResult result;
  TemporalGraph g = inst.graph;
  while (const auto p = find_l_path(g, inst.s, inst.z, inst.ell, true)) {
    const auto internals = p->internal_vertices();
    if (static_cast<int>(internals.size()) > inst.ell - 1)
      throw std::logic_error("strict witness exceeded the ell-1 vertex bound");
    result.separator = set_union(result.separator, internals);
    g = remove_vertices(g, internals);
    ++result.lower_bound;
  }
  return result;
}

}  // namespace tgr
