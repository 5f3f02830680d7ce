#pragma once

#include <optional>

#include "tgr/core.hpp"
#include "tgr/path_query.hpp"

namespace tgr {

namespace detail {

inline std::vector<VertexId> internal_in_order(const TemporalPath& p) {
  const auto vs = p.vertices();
  return {vs.begin() + 1, vs.end() - 1};
}

inline bool has_direct_edge(const Instance& inst) {
  for (const auto& [t, w] : inst.graph.incident(inst.s))
    if (w == inst.z) return true;
  return false;
}

/// Feasible separator by repeatedly deleting every internal vertex of some
/// witness path.  Used to seed the branch-and-bound incumbent.
inline VertexSet greedy_hitting_separator(const Instance& inst) {
  VertexSet out;
  TemporalGraph g = inst.graph;
  while (const auto p = find_l_path(g, inst.s, inst.z, inst.ell, inst.strict)) {
    const auto internals = p->internal_vertices();
    out = set_union(out, internals);
    g = remove_vertices(g, internals);
  }
  return out;
}

/// Count of internally-vertex-disjoint witness paths; every separator must
/// delete at least one vertex per witness.  Stops once `cap` is reached.
inline int disjoint_witness_count(const Instance& inst, const TemporalGraph& g, int cap) {
  int count = 0;
  TemporalGraph cur = g;
  while (count < cap) {
    const auto p = find_l_path(cur, inst.s, inst.z, inst.ell, inst.strict);
    if (!p) break;
    ++count;
    cur = remove_vertices(cur, p->internal_vertices());
  }
  return count;
}

struct SeparatorSearch {
  const Instance& inst;
  VertexSet best;
  std::vector<char> forbidden;

  void run(const TemporalGraph& g, VertexSet& deleted) {
    const auto p = find_l_path(g, inst.s, inst.z, inst.ell, inst.strict);
    if (!p) {
      if (deleted.size() < best.size()) {
        best = deleted;
        sort_unique(best);
      }
      return;
    }
    const int budget = static_cast<int>(best.size()) - static_cast<int>(deleted.size());
    if (budget <= 1) return;
    if (disjoint_witness_count(inst, g, budget) >= budget) return;
    std::vector<VertexId> marked;
    for (const VertexId v : internal_in_order(*p)) {
      if (forbidden[static_cast<size_t>(v)]) continue;
      deleted.push_back(v);
      run(remove_vertices(g, {v}), deleted);
      deleted.pop_back();
      forbidden[static_cast<size_t>(v)] = 1;
      marked.push_back(v);
    }
    for (const VertexId v : marked) forbidden[static_cast<size_t>(v)] = 0;
  }
};

}  // namespace detail

/// Minimum (s,z,ell)-[strict-]temporal separator by hitting-set branching on
/// witness paths, pruned by internally-disjoint witness counts and an
/// incumbent from greedy full-path deletion.  Absent iff a direct s-z edge
/// exists, in which case no vertex separator can work.
inline std::optional<VertexSet> exact_separator(const Instance& inst, int max_n = 16) {
  if (inst.graph.alive_count() > max_n)
    throw TooLargeError("instance exceeds the separator oracle bound of " +
                        std::to_string(max_n) + " vertices");
  if (detail::has_direct_edge(inst)) return std::nullopt;
  detail::SeparatorSearch search{inst, detail::greedy_hitting_separator(inst), {}};
  search.forbidden.assign(static_cast<size_t>(inst.graph.vertex_count()), 0);
  VertexSet deleted;
  search.run(inst.graph, deleted);
  sort_unique(search.best);
  return search.best;
}

/// Minimum separator by plain subset enumeration in increasing size.
/// The inner reference that validates the branching oracle.
inline std::optional<VertexSet> naive_separator(const Instance& inst, int max_n = 14) {
  if (inst.graph.alive_count() > max_n)
    throw TooLargeError("instance exceeds the naive separator bound of " +
                        std::to_string(max_n) + " vertices");
  if (detail::has_direct_edge(inst)) return std::nullopt;
  VertexSet candidates;
  for (const VertexId v : inst.graph.alive_vertices())
    if (v != inst.s && v != inst.z) candidates.push_back(v);
  const int c = static_cast<int>(candidates.size());
  for (int k = 0; k <= c; ++k) {
    std::vector<int> pick(static_cast<size_t>(c), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    // iterate k-subsets in lexicographic order of member lists
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
      VertexSet del;
      for (const int i : idx) del.push_back(candidates[static_cast<size_t>(i)]);
      if (!has_l_path(remove_vertices(inst.graph, del), inst.s, inst.z, inst.ell, inst.strict))
        return del;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == c - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
  return VertexSet{};  // unreachable: deleting all candidates always works
}

namespace detail {

constexpr int kNoCut = std::numeric_limits<int>::max() / 2;

inline EdgeSet path_edges_in_order(const TemporalPath& p) {
  EdgeSet out;
  for (const auto& st : p.steps) out.push_back(make_edge(st.from, st.to, st.t));
  return out;  // path order, not canonical order
}

/// Count of temporal-edge-disjoint witness paths, each of which must lose a
/// deletable edge.  Returns kNoCut if some witness has no deletable edge.
inline int disjoint_edge_witness_count(const Instance& inst, const TemporalGraph& g,
                                       const EdgeSet& deletable, int cap) {
  int count = 0;
  TemporalGraph cur = g;
  while (count < cap) {
    const auto p = find_l_path(cur, inst.s, inst.z, inst.ell, inst.strict);
    if (!p) break;
    bool cuttable = false;
    for (const auto& e : path_edges_in_order(*p))
      if (contains(deletable, e)) {
        cuttable = true;
        break;
      }
    if (!cuttable) return kNoCut;
    ++count;
    cur = remove_edges(cur, p->edge_set());
  }
  return count;
}

struct CutSearch {
  const Instance& inst;
  const EdgeSet& deletable;
  EdgeSet best;
  EdgeSet forbidden;

  void run(const TemporalGraph& g, EdgeSet& removed) {
    const auto p = find_l_path(g, inst.s, inst.z, inst.ell, inst.strict);
    if (!p) {
      if (removed.size() < best.size()) {
        best = removed;
        sort_unique(best);
      }
      return;
    }
    const int budget = static_cast<int>(best.size()) - static_cast<int>(removed.size());
    if (budget <= 1) return;
    const int lb = disjoint_edge_witness_count(inst, g, deletable, budget);
    if (lb >= budget) return;
    EdgeSet marked;
    for (const auto& e : path_edges_in_order(*p)) {
      if (!contains(deletable, e) || contains(forbidden, e)) continue;
      removed.push_back(e);
      run(remove_edges(g, {e}), removed);
      removed.pop_back();
      forbidden.push_back(e);
      sort_unique(forbidden);
      marked.push_back(e);
    }
    for (const auto& e : marked)
      forbidden.erase(std::find(forbidden.begin(), forbidden.end(), e));
  }
};

inline EdgeSet greedy_hitting_cut(const Instance& inst, const EdgeSet& deletable) {
  EdgeSet out;
  TemporalGraph g = inst.graph;
  while (const auto p = find_l_path(g, inst.s, inst.z, inst.ell, inst.strict)) {
    EdgeSet hits;
    for (const auto& e : p->edge_set())
      if (contains(deletable, e)) hits.push_back(e);
    if (hits.empty())
      throw UncuttableError("an ell-temporal s-z path avoids every deletable edge");
    out = set_union(out, hits);
    g = remove_edges(g, hits);
  }
  return out;
}

}  // namespace detail

/// Minimum (s,z,ell)-temporal cut by branching on witness-path edges.  When
/// `deletable` is given the cut is restricted to those edges; UncuttableError
/// if some witness path avoids them all.  `incumbent`, when supplied, must be
/// a feasible cut and only tightens the search.
inline EdgeSet exact_cut(const Instance& inst,
                         const std::optional<EdgeSet>& deletable = std::nullopt,
                         const std::optional<EdgeSet>& incumbent = std::nullopt,
                         int max_edges = 256) {
  if (static_cast<int>(inst.graph.edges().size()) > max_edges)
    throw TooLargeError("instance exceeds the cut oracle bound of " +
                        std::to_string(max_edges) + " edges");
  EdgeSet del = deletable ? *deletable : inst.graph.edges();
  sort_unique(del);
  detail::CutSearch search{inst, del, detail::greedy_hitting_cut(inst, del), {}};
  if (incumbent && incumbent->size() < search.best.size()) {
    if (has_l_path(remove_edges(inst.graph, *incumbent), inst.s, inst.z, inst.ell, inst.strict))
      throw std::invalid_argument("supplied incumbent is not a feasible cut");
    search.best = *incumbent;
  }
  EdgeSet removed;
  search.run(inst.graph, removed);
  sort_unique(search.best);
  return search.best;
}

/// Minimum cut by subset enumeration in increasing size.
inline EdgeSet naive_cut(const Instance& inst,
                         const std::optional<EdgeSet>& deletable = std::nullopt,
                         int max_edges = 24) {
  if (static_cast<int>(inst.graph.edges().size()) > max_edges)
    throw TooLargeError("instance exceeds the naive cut bound of " +
                        std::to_string(max_edges) + " edges");
  EdgeSet del = deletable ? *deletable : inst.graph.edges();
  sort_unique(del);
  const int m = static_cast<int>(del.size());
  for (int k = 0; k <= m; ++k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
      EdgeSet cut;
      for (const int i : idx) cut.push_back(del[static_cast<size_t>(i)]);
      if (!has_l_path(remove_edges(inst.graph, cut), inst.s, inst.z, inst.ell, inst.strict))
        return cut;
      if (k == 0) break;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
  throw UncuttableError("an ell-temporal s-z path avoids every deletable edge");
}

}  // namespace tgr
