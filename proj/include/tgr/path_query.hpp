#pragma once

#include <deque>
#include <limits>
#include <map>
#include <optional>

#include "tgr/core.hpp"

namespace tgr {

namespace detail {

constexpr Timestamp kNever = std::numeric_limits<Timestamp>::max();

struct ArrivalSearch {
  std::vector<Timestamp> arrive;  // earliest last-edge time; kNever if unreachable, 0 at source
  std::vector<PathStep> parent;
};

inline std::map<Timestamp, EdgeSet> edges_by_time(const TemporalGraph& g, Timestamp lo,
                                                  Timestamp hi) {
  std::map<Timestamp, EdgeSet> out;
  for (const auto& e : g.edges())
    if (e.t >= lo && e.t <= hi) out[e.t].push_back(e);
  return out;
}

/// Label-setting earliest arrival from s over temporal paths whose edge times
/// lie in [lo, hi].  Within one timestamp, non-strict paths may chain several
/// edges (handled by a snapshot BFS); strict paths take at most one edge per
/// timestamp.  Each vertex is labeled once, so parent pointers form a tree and
/// reconstructed witnesses are simple.
inline ArrivalSearch earliest_arrival(const TemporalGraph& g, VertexId s, Timestamp lo,
                                      Timestamp hi, bool strict) {
  ArrivalSearch res;
  res.arrive.assign(static_cast<size_t>(g.vertex_count()), kNever);
  res.parent.assign(static_cast<size_t>(g.vertex_count()), PathStep{});
  if (!g.is_alive(s)) return res;
  res.arrive[static_cast<size_t>(s)] = 0;
  const auto buckets = edges_by_time(g, lo, hi);
  for (const auto& [t, snapshot] : buckets) {
    if (strict) {
      for (const auto& e : snapshot) {
        for (const auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          // a freshly labeled vertex has arrive == t and is correctly skipped
          if (res.arrive[static_cast<size_t>(a)] < t &&
              res.arrive[static_cast<size_t>(b)] == kNever) {
            res.arrive[static_cast<size_t>(b)] = t;
            res.parent[static_cast<size_t>(b)] = PathStep{a, b, t};
          }
        }
      }
    } else {
      std::deque<VertexId> queue;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (res.arrive[static_cast<size_t>(v)] <= t) queue.push_back(v);
      while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (const auto& e : snapshot) {
          VertexId w;
          if (e.u == u) w = e.v;
          else if (e.v == u) w = e.u;
          else continue;
          if (res.arrive[static_cast<size_t>(w)] == kNever) {
            res.arrive[static_cast<size_t>(w)] = t;
            res.parent[static_cast<size_t>(w)] = PathStep{u, w, t};
            queue.push_back(w);
          }
        }
      }
    }
  }
  return res;
}

inline TemporalPath reconstruct(const ArrivalSearch& search, VertexId s, VertexId z) {
  TemporalPath path;
  VertexId v = z;
  while (v != s) {
    const PathStep st = search.parent[static_cast<size_t>(v)];
    path.steps.push_back(st);
    v = st.from;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

/// Distinct times of edges incident to s; a temporal path's first edge time is
/// always one of them, so these are the only window starts worth trying.
inline std::vector<Timestamp> start_times(const TemporalGraph& g, VertexId s) {
  std::vector<Timestamp> out;
  if (!g.is_alive(s)) return out;
  for (const auto& [t, w] : g.incident(s))
    if (out.empty() || out.back() != t) out.push_back(t);
  return out;
}

}  // namespace detail

/// Minimum travelling time over all (strict) temporal s-z paths.
inline std::optional<int> min_travel_time(const TemporalGraph& g, VertexId s, VertexId z,
                                          bool strict) {
  if (s == z) throw std::invalid_argument("source and target must differ");
  std::optional<int> best;
  for (const Timestamp t0 : detail::start_times(g, s)) {
    const auto search = detail::earliest_arrival(g, s, t0, g.horizon(), strict);
    const Timestamp az = search.arrive[static_cast<size_t>(z)];
    if (az == detail::kNever) continue;
    const int tt = az - t0 + 1;
    if (!best || tt < *best) best = tt;
    if (*best == 1) break;
  }
  return best;
}

/// True iff any (strict) temporal s-z path exists, regardless of travel time.
inline bool has_temporal_path(const TemporalGraph& g, VertexId s, VertexId z, bool strict) {
  if (s == z) throw std::invalid_argument("source and target must differ");
  if (!g.is_alive(z)) return false;
  const auto search = detail::earliest_arrival(g, s, 1, g.horizon(), strict);
  return search.arrive[static_cast<size_t>(z)] != detail::kNever;
}

/// True iff a (strict) ell-temporal s-z path exists.  Equivalent to scanning
/// the length-ell windows anchored at the times of edges incident to s.
inline bool has_l_path(const TemporalGraph& g, VertexId s, VertexId z, int ell, bool strict) {
  if (s == z) throw std::invalid_argument("source and target must differ");
  if (!g.is_alive(z)) return false;
  for (const Timestamp t0 : detail::start_times(g, s)) {
    const Timestamp hi = std::min<Timestamp>(t0 + ell - 1, g.horizon());
    const auto search = detail::earliest_arrival(g, s, t0, hi, strict);
    if (search.arrive[static_cast<size_t>(z)] != detail::kNever) return true;
  }
  return false;
}

/// Witness (strict) ell-temporal s-z path, or absent.  The witness comes from
/// the earliest feasible window, with edges explored in (time, canonical)
/// order, so repeated runs return the same path.
inline std::optional<TemporalPath> find_l_path(const TemporalGraph& g, VertexId s, VertexId z,
                                               int ell, bool strict) {
  if (s == z) throw std::invalid_argument("source and target must differ");
  if (!g.is_alive(z)) return std::nullopt;
  for (const Timestamp t0 : detail::start_times(g, s)) {
    const Timestamp hi = std::min<Timestamp>(t0 + ell - 1, g.horizon());
    const auto search = detail::earliest_arrival(g, s, t0, hi, strict);
    if (search.arrive[static_cast<size_t>(z)] != detail::kNever)
      return detail::reconstruct(search, s, z);
  }
  return std::nullopt;
}

inline bool has_l_path(const Instance& inst) {
  return has_l_path(inst.graph, inst.s, inst.z, inst.ell, inst.strict);
}

inline std::optional<TemporalPath> find_l_path(const Instance& inst) {
  return find_l_path(inst.graph, inst.s, inst.z, inst.ell, inst.strict);
}

}  // namespace tgr
