// treepath/oracle.hpp - Brute-force shortest-path reference. Every other
// solver in the library is verified against oracle_apsp, so this file must
// stay free of reweighting or ordering tricks.
#pragma once

#include <optional>
#include <vector>

#include "treepath/graph.hpp"

namespace treepath {

/// Exact single-source distances by Bellman-Ford; nullopt iff a negative
/// cycle is reachable from s.
inline std::optional<std::vector<double>> bellman_ford_sssp(const Graph& g,
                                                            int s) {
  int n = g.vertex_count();
  if (s < 1 || s > n)
    throw std::invalid_argument("bellman_ford_sssp: source out of range");
  std::vector<Arc> arcs = g.arcs();
  std::vector<double> dist(n + 1, kInf);
  dist[s] = 0.0;
  bool changed = true;
  for (int round = 0; round < n - 1 && changed; ++round) {
    changed = false;
    for (const Arc& a : arcs) {
      if (dist[a.from] == kInf) continue;
      double cand = dist[a.from] + a.weight;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        changed = true;
      }
    }
  }
  if (changed)
    for (const Arc& a : arcs)
      if (dist[a.from] != kInf && dist[a.from] + a.weight < dist[a.to])
        return std::nullopt;
  dist.erase(dist.begin());  // drop the unused slot 0
  return dist;
}

/// Distances from a virtual source connected to every vertex by a 0-weight
/// arc; nullopt iff the graph contains a negative cycle anywhere. Used both
/// as the oracle's global consistency probe and by Johnson's reweighting.
inline std::optional<std::vector<double>> super_source_potentials(
    const Graph& g, std::uint64_t* relaxations = nullptr) {
  int n = g.vertex_count();
  std::vector<Arc> arcs = g.arcs();
  std::vector<double> dist(n + 1, 0.0);  // virtual source folded in
  std::uint64_t count = 0;
  bool changed = true;
  for (int round = 0; round < n - 1 && changed; ++round) {
    changed = false;
    for (const Arc& a : arcs) {
      ++count;
      double cand = dist[a.from] + a.weight;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        changed = true;
      }
    }
  }
  if (relaxations) *relaxations += count;
  if (changed)
    for (const Arc& a : arcs)
      if (dist[a.from] + a.weight < dist[a.to]) return std::nullopt;
  dist.erase(dist.begin());
  return dist;
}

/// Exact all-pairs matrix via one Bellman-Ford per source, or nullopt if the
/// graph contains a negative cycle (detected globally by the virtual-source
/// probe, so cycles unreachable from every individual source still count).
inline std::optional<DistanceMatrix> oracle_apsp(const Graph& g) {
  if (!super_source_potentials(g)) return std::nullopt;
  int n = g.vertex_count();
  DistanceMatrix d(n);
  for (int s = 1; s <= n; ++s) {
    auto row = bellman_ford_sssp(g, s);
    for (int v = 1; v <= n; ++v) d(s, v) = (*row)[v - 1];
  }
  return d;
}

}  // namespace treepath
