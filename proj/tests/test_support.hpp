// tests/test_support.hpp - Shared fixtures and independent reference
// implementations used to check the library: random instance samplers, a
// simple-cycle enumerator for negative-cycle ground truth, Bron-Kerbosch for
// largest cliques, and a flat-list heap simulator. These deliberately share
// no code with the implementations they check.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "treepath/treepath.hpp"

namespace test_support {

using namespace treepath;

/// Random directed graph: each unordered pair present with probability
/// edge_prob; each direction of a present pair gets a finite integer weight
/// from [wlo, whi] with probability dir_prob (at least one direction always
/// finite).
inline Graph random_graph(int n, double edge_prob, int wlo, int whi,
                          std::mt19937_64& rng, double dir_prob = 0.85) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(wlo, whi);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng) >= edge_prob) continue;
      g.add_edge(u, v);
      bool fwd = coin(rng) < dir_prob;
      bool bwd = coin(rng) < dir_prob;
      if (!fwd && !bwd) (coin(rng) < 0.5 ? fwd : bwd) = true;
      if (fwd) g.set_weight(u, v, weight(rng));
      if (bwd) g.set_weight(v, u, weight(rng));
    }
  return g;
}

inline VertexOrdering random_ordering(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return VertexOrdering::from_order(std::move(order));
}

namespace detail {
inline void cycle_dfs(const std::vector<std::vector<std::pair<int, double>>>&
                          out_arcs,
                      int start, int v, double weight,
                      std::vector<char>& on_path, bool& found_negative) {
  if (found_negative) return;
  for (auto [u, w] : out_arcs[v]) {
    if (u == start) {
      if (weight + w < 0) found_negative = true;
    } else if (u > start && !on_path[u]) {
      on_path[u] = 1;
      cycle_dfs(out_arcs, start, u, weight + w, on_path, found_negative);
      on_path[u] = 0;
    }
  }
}
}  // namespace detail

/// Ground truth for negative cycles by enumerating every simple directed
/// cycle. Exponential; intended for n <= 8.
inline bool has_negative_cycle_by_enumeration(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, double>>> out_arcs(n + 1);
  for (const Arc& a : g.arcs()) out_arcs[a.from].emplace_back(a.to, a.weight);
  bool found = false;
  std::vector<char> on_path(n + 1, 0);
  for (int s = 1; s <= n && !found; ++s) {
    on_path[s] = 1;
    detail::cycle_dfs(out_arcs, s, s, 0.0, on_path, found);
    on_path[s] = 0;
  }
  return found;
}

namespace detail {
inline void bron_kerbosch(const Graph& g, std::vector<int>& R,
                          std::vector<int> P, std::vector<int> X,
                          std::size_t& best) {
  if (P.empty() && X.empty()) {
    best = std::max(best, R.size());
    return;
  }
  int pivot = !P.empty() ? P.front() : X.front();
  std::vector<int> candidates;
  for (int v : P)
    if (!g.has_edge(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int u : P)
      if (g.has_edge(u, v)) P2.push_back(u);
    for (int u : X)
      if (g.has_edge(u, v)) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), best);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}
}  // namespace detail

/// Size of the largest clique under the undirected presence relation.
inline int max_clique_size(const Graph& g) {
  std::vector<int> R, P, X;
  for (int v = 1; v <= g.vertex_count(); ++v) P.push_back(v);
  std::size_t best = 0;
  detail::bron_kerbosch(g, R, std::move(P), std::move(X), best);
  return static_cast<int>(best);
}

/// Flat sorted-scan reference for the addressable heaps.
struct ReferenceHeap {
  std::vector<std::pair<int, double>> live;  // (id, key)

  void insert(int id, double key) { live.emplace_back(id, key); }
  void decrease(int id, double key) {
    for (auto& [i, k] : live)
      if (i == id) {
        k = key;
        return;
      }
  }
  double extract_min_key() {
    std::size_t at = 0;
    for (std::size_t i = 1; i < live.size(); ++i)
      if (live[i].second < live[at].second) at = i;
    double key = live[at].second;
    live.erase(live.begin() + at);
    return key;
  }
};

/// Small instance from one of the six families, cycling by index; all have
/// n <= 60 and integer weights.
inline Graph random_family_instance(int index, std::uint64_t seed) {
  InstanceSpec spec;
  spec.seed = seed;
  std::mt19937_64 rng(seed * 7919 + index);
  switch (index % 6) {
    case 0:
      spec.family = Family::Chordal;
      spec.n = 20 + static_cast<int>(rng() % 40);
      spec.width = 2 + static_cast<int>(rng() % 6);
      break;
    case 1: {
      spec.family = Family::ChordalBoundedSep;
      spec.width = 3 + static_cast<int>(rng() % 4);
      spec.sep_size = 1 + static_cast<int>(rng() % spec.width);
      int fresh = spec.width + 1 - spec.sep_size;
      int blocks = 1 + static_cast<int>(rng() % 8);
      spec.n = spec.width + 1 + blocks * fresh;
      break;
    }
    case 2:
      spec.family = Family::ScaleFree;
      spec.n = 25 + static_cast<int>(rng() % 35);
      spec.attachment = 2 + static_cast<int>(rng() % 3);
      break;
    case 3:
      spec.family = Family::Diamonds;
      spec.diamonds = 3 + static_cast<int>(rng() % 6);
      spec.path_len = 2 + static_cast<int>(rng() % 2);
      break;
    case 4:
      spec.family = Family::JobShop;
      spec.jobs = 2 + static_cast<int>(rng() % 3);
      spec.machines = 3 + static_cast<int>(rng() % 4);
      break;
    default:
      spec.family = Family::Htn;
      spec.tasks = 10 + static_cast<int>(rng() % 15);
      spec.branching = 2 + static_cast<int>(rng() % 4);
      spec.depth = 3 + static_cast<int>(rng() % 3);
      spec.landmark_ratio = (rng() % 5) * 0.1;
      spec.sibling_prob = (rng() % 5) * 0.1;
      break;
  }
  return make_instance(spec);
}

}  // namespace test_support
