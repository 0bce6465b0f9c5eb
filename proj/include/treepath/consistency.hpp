// treepath/consistency.hpp - Directed and partial path consistency, the
// shared preprocessing of the ordering-based shortest-path solvers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treepath/graph.hpp"
#include "treepath/ordering.hpp"

namespace treepath {

// A directionally path-consistent graph: chordal, and for positions i < j
// the arc i->j is no longer than any i..j path through higher positions
// only. In particular the arcs between positions 1 and 2 hold true shortest
// distances.
struct DpcGraph {
  Graph graph;  // fill edges added, weights relaxed
  VertexOrdering ordering;
  UpdateCounter counter;  // min-update statements executed by the sweep
  std::vector<std::pair<int, int>> fill_edges;
  int induced_width = 0;
  // arc_mid(u,v) = interior vertex of the path the arc u->v currently
  // stands for (0 = original arc). Only filled when midpoints are requested.
  SquareMatrix<std::int32_t> arc_mid;
};

// Partially path-consistent: every present arc carries the true shortest
// distance between its endpoints.
struct PpcGraph {
  Graph graph;
  VertexOrdering ordering;
  UpdateCounter counter;  // dpc_updates + forward-sweep updates
  std::uint64_t dpc_updates = 0;
  std::vector<std::pair<int, int>> fill_edges;
  int induced_width = 0;
};

/// The consistency sweep: for k = n downto 1, every pair (i, j) of
/// lower-positioned neighbours of the vertex at position k is relaxed
/// through it (both directions), the pair is connected, and a negative
/// two-cycle between i and j signals a negative cycle in the input.
/// Pairs iterate in ascending position order; the counter advances once per
/// executed min-update. Returns nullopt on inconsistency.
inline std::optional<DpcGraph> dpc(const Graph& g, const VertexOrdering& d,
                                   bool record_midpoints = false) {
  int n = g.vertex_count();
  if (d.size() != n)
    throw std::invalid_argument("dpc: ordering size mismatch");
  DpcGraph out;
  out.graph = g;
  out.ordering = d;
  if (record_midpoints) out.arc_mid = SquareMatrix<std::int32_t>(n, 0);

  // A pair whose two arcs already close a negative cycle may never show up
  // as a lower pair of any later vertex (it has no common higher neighbour),
  // so the in-loop check below would miss it. Its weights never change in
  // that case, which makes this one upfront pass over the input pairs
  // sufficient for completeness.
  for (auto [u, v] : g.edges())
    if (g.weight(u, v) + g.weight(v, u) < 0) return std::nullopt;

  std::vector<int> lower;
  for (int k = n; k >= 1; --k) {
    int vk = d.vertex_at(k);
    lower.clear();
    for (int u : out.graph.neighbours(vk))
      if (d.position_of(u) < k) lower.push_back(u);
    std::sort(lower.begin(), lower.end(), [&](int a, int b) {
      return d.position_of(a) < d.position_of(b);
    });
    int deg = static_cast<int>(lower.size());
    out.induced_width = std::max(out.induced_width, deg);

    for (int a = 0; a < deg; ++a)
      for (int b = a + 1; b < deg; ++b) {
        int i = lower[a], j = lower[b];
        double through_k = out.graph.weight(i, vk) + out.graph.weight(vk, j);
        double back_k = out.graph.weight(j, vk) + out.graph.weight(vk, i);
        if (out.graph.add_edge(i, j))
          out.fill_edges.emplace_back(std::min(i, j), std::max(i, j));
        out.counter.relaxations += 2;
        if (through_k < out.graph.weight(i, j)) {
          out.graph.set_weight(i, j, through_k);
          if (record_midpoints) out.arc_mid(i, j) = vk;
        }
        if (back_k < out.graph.weight(j, i)) {
          out.graph.set_weight(j, i, back_k);
          if (record_midpoints) out.arc_mid(j, i) = vk;
        }
        if (out.graph.weight(i, j) + out.graph.weight(j, i) < 0)
          return std::nullopt;
      }
  }
  std::sort(out.fill_edges.begin(), out.fill_edges.end());
  return out;
}

/// Consistency sweep followed by a single forward sweep: for k = 1..n, all
/// ordered pairs (i, j) of distinct lower-positioned neighbours of the
/// vertex at position k relax the arcs i->k (through j) and k->j (through
/// i). Afterwards every present arc holds the exact shortest distance.
inline std::optional<PpcGraph> p3c(const Graph& g, const VertexOrdering& d) {
  auto pre = dpc(g, d);
  if (!pre) return std::nullopt;
  PpcGraph out;
  out.graph = std::move(pre->graph);
  out.ordering = std::move(pre->ordering);
  out.counter = pre->counter;
  out.dpc_updates = pre->counter.relaxations;
  out.fill_edges = std::move(pre->fill_edges);
  out.induced_width = pre->induced_width;

  int n = out.graph.vertex_count();
  std::vector<int> lower;
  for (int k = 1; k <= n; ++k) {
    int vk = d.vertex_at(k);
    lower.clear();
    for (int u : out.graph.neighbours(vk))
      if (d.position_of(u) < k) lower.push_back(u);
    std::sort(lower.begin(), lower.end(), [&](int a, int b) {
      return d.position_of(a) < d.position_of(b);
    });
    for (int i : lower)
      for (int j : lower) {
        if (i == j) continue;
        out.counter.relaxations += 2;
        double in_cand = out.graph.weight(i, j) + out.graph.weight(j, vk);
        if (in_cand < out.graph.weight(i, vk))
          out.graph.set_weight(i, vk, in_cand);
        double out_cand = out.graph.weight(vk, i) + out.graph.weight(i, j);
        if (out_cand < out.graph.weight(vk, j))
          out.graph.set_weight(vk, j, out_cand);
      }
  }
  return out;
}

}  // namespace treepath
