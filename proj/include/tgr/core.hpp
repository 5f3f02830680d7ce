#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tgr {

using VertexId = int;
using Timestamp = int;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Instance admits no solution (e.g. a direct s-z edge for separator problems).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Some s-z temporal path avoids every deletable edge.
class UncuttableError : public std::runtime_error {
 public:
  explicit UncuttableError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds the configured size bound of an exponential-time routine.
class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Underlying static graph has pathwidth above the supported bound.
class PathwidthExceededError : public std::runtime_error {
 public:
  explicit PathwidthExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied path decomposition violates its invariants.
class InvalidDecompositionError : public std::runtime_error {
 public:
  explicit InvalidDecompositionError(const std::string& what) : std::runtime_error(what) {}
};

/// Routine invoked with a deadline it does not support.
class WrongDeadlineError : public std::runtime_error {
 public:
  explicit WrongDeadlineError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural preconditions were violated by the caller (internal bug).
class StructureNotFoundError : public std::logic_error {
 public:
  explicit StructureNotFoundError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed input text; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// ---------------------------------------------------------------------------
// Basic value types
// ---------------------------------------------------------------------------

/// An undirected timestamped edge, stored canonically with u < v.
struct TemporalEdge {
  VertexId u = 0;
  VertexId v = 0;
  Timestamp t = 0;

  friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

/// Canonicalizes endpoint order; (v,u,t) and (u,v,t) denote the same edge.
inline TemporalEdge make_edge(VertexId a, VertexId b, Timestamp t) {
  if (a == b) throw std::invalid_argument("temporal edge endpoints must differ");
  if (a > b) std::swap(a, b);
  return TemporalEdge{a, b, t};
}

struct TimeInterval {
  Timestamp t1 = 1;
  Timestamp t2 = 1;

  friend auto operator<=>(const TimeInterval&, const TimeInterval&) = default;
};

using VertexSet = std::vector<VertexId>;  // kept sorted and unique
using EdgeSet = std::vector<TemporalEdge>;  // kept sorted and unique

inline void sort_unique(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline void sort_unique(EdgeSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool contains(const EdgeSet& s, const TemporalEdge& e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline VertexSet set_union(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_unique(a);
  return a;
}

inline EdgeSet set_union(EdgeSet a, const EdgeSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_unique(a);
  return a;
}

// ---------------------------------------------------------------------------
// TemporalGraph
// ---------------------------------------------------------------------------

/// Immutable temporal graph over vertices [0, n) with horizon tau.
///
/// Vertices removed by a view are marked absent rather than reindexed, so
/// solution sets always refer to original ids.
class TemporalGraph {
 public:
  TemporalGraph() : n_(0), tau_(1) {}

  TemporalGraph(int vertex_count, Timestamp horizon, EdgeSet edge_list)
      : n_(vertex_count), tau_(horizon), alive_(static_cast<size_t>(vertex_count), 1) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    for (auto& e : edge_list) {
      e = make_edge(e.u, e.v, e.t);
      check_edge(e);
    }
    sort_unique(edge_list);
    edges_ = std::move(edge_list);
    build_index();
  }

  int vertex_count() const { return n_; }
  Timestamp horizon() const { return tau_; }
  const EdgeSet& edges() const { return edges_; }

  bool is_alive(VertexId v) const { return v >= 0 && v < n_ && alive_[static_cast<size_t>(v)]; }

  int alive_count() const {
    return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
  }

  VertexSet alive_vertices() const {
    VertexSet out;
    for (VertexId v = 0; v < n_; ++v)
      if (alive_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
  }

  bool has_edge(VertexId a, VertexId b, Timestamp t) const {
    if (a == b) return false;
    return contains(edges_, make_edge(a, b, t));
  }

  /// Incident (neighbor, time) pairs, sorted by (time, neighbor).
  const std::vector<std::pair<Timestamp, VertexId>>& incident(VertexId v) const {
    return incident_.at(static_cast<size_t>(v));
  }

  VertexSet static_neighbors(VertexId v) const {
    VertexSet out;
    for (const auto& [t, w] : incident(v)) out.push_back(w);
    sort_unique(out);
    return out;
  }

  /// Same edges, wider horizon.  Used for padding the time domain.
  TemporalGraph with_horizon(Timestamp new_tau) const {
    if (new_tau < tau_) throw std::invalid_argument("horizon may only grow");
    TemporalGraph g = *this;
    g.tau_ = new_tau;
    return g;
  }

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.n_ == b.n_ && a.tau_ == b.tau_ && a.alive_ == b.alive_ && a.edges_ == b.edges_;
  }

  friend TemporalGraph restrict_interval(const TemporalGraph& g, TimeInterval iv);
  friend TemporalGraph remove_vertices(const TemporalGraph& g, const VertexSet& del);
  friend TemporalGraph remove_edges(const TemporalGraph& g, const EdgeSet& del);

 private:
  void check_edge(const TemporalEdge& e) const {
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.t < 1 || e.t > tau_)
      throw std::invalid_argument("edge time out of range");
  }

  void build_index() {
    incident_.assign(static_cast<size_t>(n_), {});
    for (const auto& e : edges_) {
      incident_[static_cast<size_t>(e.u)].emplace_back(e.t, e.v);
      incident_[static_cast<size_t>(e.v)].emplace_back(e.t, e.u);
    }
    for (auto& inc : incident_) std::sort(inc.begin(), inc.end());
  }

  int n_;
  Timestamp tau_;
  EdgeSet edges_;
  std::vector<char> alive_;
  std::vector<std::vector<std::pair<Timestamp, VertexId>>> incident_;
};

/// Temporal subgraph with edge times inside [t1, t2]; the interval is clamped
/// to [1, tau], so out-of-range windows simply yield fewer edges.
inline TemporalGraph restrict_interval(const TemporalGraph& g, TimeInterval iv) {
  const Timestamp lo = std::max<Timestamp>(iv.t1, 1);
  const Timestamp hi = std::min<Timestamp>(iv.t2, g.horizon());
  TemporalGraph out = g;
  out.edges_.clear();
  for (const auto& e : g.edges())
    if (e.t >= lo && e.t <= hi) out.edges_.push_back(e);
  out.build_index();
  return out;
}

/// Marks the given vertices absent and drops their incident edges.
inline TemporalGraph remove_vertices(const TemporalGraph& g, const VertexSet& del) {
  for (VertexId v : del)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("removed vertex out of range");
  TemporalGraph out = g;
  for (VertexId v : del) out.alive_[static_cast<size_t>(v)] = 0;
  EdgeSet kept;
  for (const auto& e : out.edges_)
    if (out.alive_[static_cast<size_t>(e.u)] && out.alive_[static_cast<size_t>(e.v)])
      kept.push_back(e);
  out.edges_ = std::move(kept);
  out.build_index();
  return out;
}

inline TemporalGraph remove_edges(const TemporalGraph& g, const EdgeSet& del) {
  EdgeSet sorted = del;
  sort_unique(sorted);
  TemporalGraph out = g;
  EdgeSet kept;
  for (const auto& e : out.edges_)
    if (!contains(sorted, e)) kept.push_back(e);
  out.edges_ = std::move(kept);
  out.build_index();
  return out;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// One directed traversal of an undirected temporal edge.
struct PathStep {
  VertexId from = 0;
  VertexId to = 0;
  Timestamp t = 0;

  friend auto operator<=>(const PathStep&, const PathStep&) = default;
};

struct TemporalPath {
  std::vector<PathStep> steps;

  bool empty() const { return steps.empty(); }

  /// tt(P) = t_last - t_first + 1.
  int travel_time() const {
    if (steps.empty()) return 0;
    return steps.back().t - steps.front().t + 1;
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    if (steps.empty()) return out;
    out.push_back(steps.front().from);
    for (const auto& st : steps) out.push_back(st.to);
    return out;
  }

  VertexSet internal_vertices() const {
    VertexSet out;
    const auto vs = vertices();
    for (size_t i = 1; i + 1 < vs.size(); ++i) out.push_back(vs[i]);
    sort_unique(out);
    return out;
  }

  EdgeSet edge_set() const {
    EdgeSet out;
    for (const auto& st : steps) out.push_back(make_edge(st.from, st.to, st.t));
    sort_unique(out);
    return out;
  }

  friend auto operator<=>(const TemporalPath&, const TemporalPath&) = default;
};

/// Checks that p is a well-formed (strict) temporal path in g with tt <= ell:
/// all edges present, consecutive steps chained, no vertex repeated.
/// Malformed or empty paths are simply reported as invalid.
inline bool validate_path(const TemporalGraph& g, const TemporalPath& p, int ell, bool strict) {
  if (p.steps.empty()) return false;
  std::vector<VertexId> seen;
  seen.push_back(p.steps.front().from);
  for (size_t i = 0; i < p.steps.size(); ++i) {
    const auto& st = p.steps[i];
    if (st.from == st.to) return false;
    if (!g.is_alive(st.from) || !g.is_alive(st.to)) return false;
    if (!g.has_edge(st.from, st.to, st.t)) return false;
    if (i > 0) {
      if (p.steps[i - 1].to != st.from) return false;
      if (strict ? (p.steps[i - 1].t >= st.t) : (p.steps[i - 1].t > st.t)) return false;
    }
    seen.push_back(st.to);
  }
  std::vector<VertexId> uniq = seen;
  std::sort(uniq.begin(), uniq.end());
  if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return false;
  return p.travel_time() <= ell;
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

struct Instance {
  TemporalGraph graph;
  VertexId s = 0;
  VertexId z = 1;
  int ell = 1;
  bool strict = false;

  Instance() = default;

  Instance(TemporalGraph g, VertexId source, VertexId target, int deadline, bool strict_paths)
      : graph(std::move(g)), s(source), z(target), ell(deadline), strict(strict_paths) {
    if (s == z) throw std::invalid_argument("source and target must differ");
    if (s < 0 || s >= graph.vertex_count() || z < 0 || z >= graph.vertex_count())
      throw std::invalid_argument("source or target out of range");
    if (ell < 1 || ell > graph.horizon())
      throw std::invalid_argument("deadline must lie in [1, tau]");
  }

  Instance with_graph(TemporalGraph g) const {
    Instance out = *this;
    out.graph = std::move(g);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Static-graph helpers
// ---------------------------------------------------------------------------

/// Connected components of the static underlying graph of G - {s, z},
/// edge times ignored.  Each alive vertex other than s, z lands in exactly
/// one component; components are sorted by their smallest member.
inline std::vector<VertexSet> components_without_sz(const Instance& inst) {
  const auto& g = inst.graph;
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<VertexSet> out;
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_alive(v) || v == inst.s || v == inst.z || comp[static_cast<size_t>(v)] >= 0)
      continue;
    VertexSet members;
    std::vector<VertexId> stack{v};
    comp[static_cast<size_t>(v)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (const auto& [t, w] : g.incident(u)) {
        if (w == inst.s || w == inst.z) continue;
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    sort_unique(members);
    out.push_back(std::move(members));
  }
  return out;
}

/// True if a and b are connected in the static underlying graph.
inline bool static_connected(const TemporalGraph& g, VertexId a, VertexId b) {
  if (!g.is_alive(a) || !g.is_alive(b)) return false;
  if (a == b) return true;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{a};
  seen[static_cast<size_t>(a)] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& [t, w] : g.incident(u)) {
      if (!seen[static_cast<size_t>(w)]) {
        if (w == b) return true;
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace tgr
