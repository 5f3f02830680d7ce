#pragma once

#include <random>
#include <vector>

#include "tgr/core.hpp"

namespace tgr::test {

inline TemporalGraph make_graph(int n, Timestamp tau,
                                const std::vector<std::array<int, 3>>& edges) {
  EdgeSet es;
  for (const auto& e : edges) es.push_back(make_edge(e[0], e[1], e[2]));
  return TemporalGraph(n, tau, std::move(es));
}

// Exhaustive DFS over simple temporal s-z paths.  Used as the independent
// reference for every path-existence and travel-time check.
inline void enumerate_paths_rec(const TemporalGraph& g, VertexId z, bool strict,
                                std::vector<PathStep>& cur, std::vector<char>& visited,
                                VertexId at, Timestamp last, std::vector<TemporalPath>& out) {
  if (at == z) {
    out.push_back(TemporalPath{cur});
    return;
  }
  for (const auto& [t, w] : g.incident(at)) {
    if (strict ? (t <= last) : (t < last)) continue;
    if (visited[static_cast<size_t>(w)]) continue;
    visited[static_cast<size_t>(w)] = 1;
    cur.push_back(PathStep{at, w, t});
    enumerate_paths_rec(g, z, strict, cur, visited, w, t, out);
    cur.pop_back();
    visited[static_cast<size_t>(w)] = 0;
  }
}

inline std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, VertexId s, VertexId z,
                                                 bool strict) {
  std::vector<TemporalPath> out;
  if (!g.is_alive(s) || !g.is_alive(z)) return out;
  std::vector<PathStep> cur;
  std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
  visited[static_cast<size_t>(s)] = 1;
  enumerate_paths_rec(g, z, strict, cur, visited, s, 0, out);
  return out;
}

inline bool brute_has_l_path(const TemporalGraph& g, VertexId s, VertexId z, int ell,
                             bool strict) {
  for (const auto& p : enumerate_paths(g, s, z, strict))
    if (p.travel_time() <= ell) return true;
  return false;
}

inline std::optional<int> brute_min_travel_time(const TemporalGraph& g, VertexId s, VertexId z,
                                                bool strict) {
  std::optional<int> best;
  for (const auto& p : enumerate_paths(g, s, z, strict))
    if (!best || p.travel_time() < *best) best = p.travel_time();
  return best;
}

struct RandomInstanceOptions {
  int min_n = 2;
  int max_n = 8;
  Timestamp max_tau = 6;
  double edge_prob = 0.25;
  bool strict = false;
  bool allow_direct_sz = true;
  int min_ell = 1;
};

inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt) {
  std::uniform_int_distribution<int> n_dist(opt.min_n, opt.max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<Timestamp> tau_dist(std::max(1, opt.min_ell), opt.max_tau);
  const Timestamp tau = tau_dist(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const VertexId s = 0, z = n - 1;
  EdgeSet edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (!opt.allow_direct_sz && u == s && v == z) continue;
      for (Timestamp t = 1; t <= tau; ++t)
        if (coin(rng) < opt.edge_prob) edges.push_back(make_edge(u, v, t));
    }
  std::uniform_int_distribution<int> ell_dist(opt.min_ell, tau);
  return Instance(TemporalGraph(n, tau, std::move(edges)), s, z, ell_dist(rng), opt.strict);
}

}  // namespace tgr::test
