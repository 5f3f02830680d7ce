#pragma once

#include <deque>
#include <map>
#include <optional>

#include "tgr/core.hpp"
#include "tgr/path_query.hpp"

namespace tgr {

/// Result of a minimum temporal s,z-cut computation: the cut, a maximum
/// family of s-z temporal paths, and their common cardinality.
///
/// Without a deletable filter the paths are pairwise temporal-edge-disjoint.
/// With a filter they are disjoint on deletable edges but may share
/// non-deletable ones, which carry unbounded capacity.
struct FlowResult {
  EdgeSet cut;
  std::vector<TemporalPath> paths;
  int value = 0;
};

namespace detail {

/// Unit-capacity time-expanded network.
///
/// Event nodes (v, t) exist for each time t at which v has an incident edge;
/// waiting arcs join consecutive event nodes of one vertex.  Each undirected
/// temporal edge becomes a single bottleneck arc e_in -> e_out reachable from
/// both endpoint event nodes and feeding both, so one unit of flow crosses it
/// in either direction, and a bottleneck exit re-enters the same time layer
/// (non-strict paths may chain several edges within one timestamp).
class TimeExpandedNetwork {
 public:
  TimeExpandedNetwork(const TemporalGraph& g, VertexId s, VertexId z,
                      const std::optional<EdgeSet>& deletable)
      : graph_(g) {
    const long long m = static_cast<long long>(g.edges().size());
    big_ = m + 1;
    inf_ = (m + 2) * (m + 2);
    source_ = new_node();
    sink_ = new_node();
    event_of_.assign(static_cast<size_t>(g.vertex_count()), {});
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_alive(v)) continue;
      int prev = -1;
      for (const auto& [t, w] : g.incident(v)) {
        if (event_of_[static_cast<size_t>(v)].count(t)) continue;
        const int node = new_node();
        event_of_[static_cast<size_t>(v)][t] = node;
        if (prev >= 0) add_arc(prev, node, inf_);
        prev = node;
        if (v == s) add_arc(source_, node, inf_);
        if (v == z) add_arc(node, sink_, inf_);
      }
    }
    first_edge_node_ = node_count_;
    for (size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      const int in_node = new_node();
      const int out_node = new_node();
      const int u_ev = event_of_[static_cast<size_t>(e.u)].at(e.t);
      const int v_ev = event_of_[static_cast<size_t>(e.v)].at(e.t);
      add_arc(u_ev, in_node, inf_);
      add_arc(v_ev, in_node, inf_);
      const bool unit = !deletable || contains(*deletable, e);
      const int arc = add_arc(in_node, out_node, unit ? 1 : big_);
      add_arc(out_node, u_ev, inf_);
      add_arc(out_node, v_ev, inf_);
      bottleneck_arc_.push_back(arc);
      bottleneck_index_[arc] = i;
      endpoint_events_.emplace_back(u_ev, v_ev);
    }
  }

  /// BFS augmenting paths; gives up once the value can no longer correspond
  /// to a deletable-only cut (every deletable cut has at most m edges).
  long long max_flow() {
    long long flow = 0;
    const long long m = static_cast<long long>(graph_.edges().size());
    while (flow <= m) {
      std::vector<int> parent_arc(static_cast<size_t>(node_count_), -1);
      std::vector<char> seen(static_cast<size_t>(node_count_), 0);
      std::deque<int> queue{source_};
      seen[static_cast<size_t>(source_)] = 1;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == sink_) break;
        for (const int a : adj_[static_cast<size_t>(u)]) {
          if (cap_[static_cast<size_t>(a)] <= 0) continue;
          const int w = to_[static_cast<size_t>(a)];
          if (seen[static_cast<size_t>(w)]) continue;
          seen[static_cast<size_t>(w)] = 1;
          parent_arc[static_cast<size_t>(w)] = a;
          queue.push_back(w);
        }
      }
      if (!seen[static_cast<size_t>(sink_)]) break;
      long long push = inf_;
      for (int v = sink_; v != source_;) {
        const int a = parent_arc[static_cast<size_t>(v)];
        push = std::min(push, cap_[static_cast<size_t>(a)]);
        v = to_[static_cast<size_t>(a ^ 1)];
      }
      for (int v = sink_; v != source_;) {
        const int a = parent_arc[static_cast<size_t>(v)];
        cap_[static_cast<size_t>(a)] -= push;
        cap_[static_cast<size_t>(a ^ 1)] += push;
        v = to_[static_cast<size_t>(a ^ 1)];
      }
      flow += push;
    }
    return flow;
  }

  /// Bottleneck arcs crossing the residual source side, as temporal edges.
  /// Structural and non-deletable arcs never cross: each alone exceeds the
  /// achieved flow value.
  EdgeSet residual_cut() const {
    std::vector<char> reach(static_cast<size_t>(node_count_), 0);
    std::deque<int> queue{source_};
    reach[static_cast<size_t>(source_)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const int a : adj_[static_cast<size_t>(u)]) {
        if (cap_[static_cast<size_t>(a)] <= 0) continue;
        const int w = to_[static_cast<size_t>(a)];
        if (!reach[static_cast<size_t>(w)]) {
          reach[static_cast<size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    EdgeSet cut;
    for (size_t i = 0; i < bottleneck_arc_.size(); ++i) {
      const int a = bottleneck_arc_[i];
      const int in_node = to_[static_cast<size_t>(a ^ 1)];
      const int out_node = to_[static_cast<size_t>(a)];
      if (reach[static_cast<size_t>(in_node)] && !reach[static_cast<size_t>(out_node)])
        cut.push_back(graph_.edges()[i]);
    }
    sort_unique(cut);
    return cut;
  }

  /// Splits the flow into source-sink walks, mapping bottleneck traversals
  /// back to directed temporal edge occurrences.  Deterministic: the first
  /// flow-bearing arc in adjacency order is always taken.
  std::vector<std::vector<PathStep>> decompose(long long value) {
    std::vector<long long> remaining(init_cap_.size(), 0);
    for (size_t a = 0; a < init_cap_.size(); a += 2)
      remaining[a] = init_cap_[a] - cap_[a];
    std::vector<std::vector<PathStep>> walks;
    for (long long unit = 0; unit < value; ++unit) {
      std::vector<PathStep> steps;
      int node = source_;
      int prev_event = -1;
      while (node != sink_) {
        int chosen = -1;
        for (const int a : adj_[static_cast<size_t>(node)])
          if (a % 2 == 0 && remaining[static_cast<size_t>(a)] > 0) {
            chosen = a;
            break;
          }
        if (chosen < 0) throw std::logic_error("flow decomposition stalled");
        remaining[static_cast<size_t>(chosen)] -= 1;
        const int next = to_[static_cast<size_t>(chosen)];
        const auto bn = bottleneck_index_.find(chosen);
        if (bn != bottleneck_index_.end()) {
          int exit_arc = -1;
          for (const int a : adj_[static_cast<size_t>(next)])
            if (a % 2 == 0 && remaining[static_cast<size_t>(a)] > 0) {
              exit_arc = a;
              break;
            }
          if (exit_arc < 0) throw std::logic_error("flow decomposition stalled at bottleneck");
          remaining[static_cast<size_t>(exit_arc)] -= 1;
          const int exit_event = to_[static_cast<size_t>(exit_arc)];
          const auto [u_ev, v_ev] = endpoint_events_[bn->second];
          const auto& e = graph_.edges()[bn->second];
          const VertexId from = (prev_event == u_ev) ? e.u : e.v;
          const VertexId to_vertex = (exit_event == u_ev) ? e.u : e.v;
          if (from != to_vertex) steps.push_back(PathStep{from, to_vertex, e.t});
          prev_event = exit_event;
          node = exit_event;
          continue;
        }
        if (next != sink_ && next < first_edge_node_) prev_event = next;
        node = next;
      }
      walks.push_back(std::move(steps));
    }
    return walks;
  }

 private:
  int new_node() {
    adj_.emplace_back();
    return node_count_++;
  }

  int add_arc(int from, int to, long long cap) {
    const int idx = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    init_cap_.push_back(cap);
    adj_[static_cast<size_t>(from)].push_back(idx);
    to_.push_back(from);
    cap_.push_back(0);
    init_cap_.push_back(0);
    adj_[static_cast<size_t>(to)].push_back(idx + 1);
    return idx;
  }

  const TemporalGraph& graph_;
  int node_count_ = 0;
  int source_ = 0;
  int sink_ = 0;
  int first_edge_node_ = 0;
  long long big_ = 0;
  long long inf_ = 0;
  std::vector<int> to_;
  std::vector<long long> cap_;
  std::vector<long long> init_cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::map<Timestamp, int>> event_of_;
  std::vector<int> bottleneck_arc_;
  std::vector<std::pair<int, int>> endpoint_events_;
  std::map<int, size_t> bottleneck_index_;
};

/// Shortcuts a temporal walk to a simple temporal path: whenever a vertex
/// repeats, the whole excursion between its first and last occurrence is
/// dropped.  Timestamps stay non-decreasing.
inline TemporalPath repair_walk(std::vector<PathStep> steps) {
  for (;;) {
    std::vector<VertexId> seq;
    seq.push_back(steps.front().from);
    for (const auto& st : steps) seq.push_back(st.to);
    int cut_lo = -1, cut_hi = -1;
    for (size_t i = 0; i < seq.size() && cut_lo < 0; ++i)
      for (size_t j = seq.size(); j-- > i + 1;)
        if (seq[j] == seq[i]) {
          cut_lo = static_cast<int>(i);
          cut_hi = static_cast<int>(j);
          break;
        }
    if (cut_lo < 0) break;
    // steps[p] joins seq[p] to seq[p+1]; drop steps cut_lo .. cut_hi-1
    steps.erase(steps.begin() + cut_lo, steps.begin() + cut_hi);
  }
  return TemporalPath{std::move(steps)};
}

}  // namespace detail

/// Minimum temporal s,z-cut (no travel-time bound) as a min cut of the
/// time-expanded network, plus a maximum path family from flow decomposition.
///
/// When `deletable` is given, only those edges may appear in the cut; if some
/// temporal s-z path avoids every deletable edge, UncuttableError is thrown.
inline FlowResult min_temporal_cut(const TemporalGraph& g, VertexId s, VertexId z,
                                   const std::optional<EdgeSet>& deletable = std::nullopt) {
  if (s == z) throw std::invalid_argument("source and target must differ");
  FlowResult result;
  if (!g.is_alive(s) || !g.is_alive(z) || g.edges().empty()) {
    if (deletable && g.is_alive(s) && g.is_alive(z) && has_temporal_path(g, s, z, false))
      throw UncuttableError("a temporal s-z path avoids every deletable edge");
    return result;
  }
  std::optional<EdgeSet> filter = deletable;
  if (filter) sort_unique(*filter);
  detail::TimeExpandedNetwork net(g, s, z, filter);
  const long long flow = net.max_flow();
  if (flow > static_cast<long long>(g.edges().size())) {
    if (filter) throw UncuttableError("a temporal s-z path avoids every deletable edge");
    throw std::logic_error("flow exceeded edge count without a deletable filter");
  }
  result.value = static_cast<int>(flow);
  result.cut = net.residual_cut();
  if (static_cast<long long>(result.cut.size()) != flow)
    throw std::logic_error("cut size does not match flow value");
  if (has_temporal_path(remove_edges(g, result.cut), s, z, false))
    throw std::logic_error("flow cut failed certification");
  for (auto& walk : net.decompose(flow)) {
    TemporalPath path = detail::repair_walk(std::move(walk));
    if (!validate_path(g, path, g.horizon(), false))
      throw std::logic_error("decomposed path failed validation");
    result.paths.push_back(std::move(path));
  }
  return result;
}

/// Maximum family of pairwise temporal-edge-disjoint s-z temporal paths.
inline std::vector<TemporalPath> max_disjoint_paths(const TemporalGraph& g, VertexId s,
                                                    VertexId z) {
  return min_temporal_cut(g, s, z).paths;
}

}  // namespace tgr
