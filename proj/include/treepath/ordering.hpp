// treepath/ordering.hpp - Vertex-ordering heuristics, triangulation along an
// ordering, induced width, and chordality testing.
//
// Position convention: an ordering is a bijection V -> {1..n}. The
// consistency sweep processes positions n downto 1 and connects each
// vertex's lower-positioned neighbours, so elimination proceeds from
// position n downward. Heuristics that simulate elimination therefore give
// the first vertex they pick the HIGHEST free position.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treepath/graph.hpp"

namespace treepath {

enum class Heuristic {
  MinDegree,
  MinFill,
  StaticMinDegree,
  StaticMinFill,
  Mcs,
  Random,
};

struct VertexOrdering {
  std::vector<int> order;  // order[p-1] = vertex at position p
  std::vector<int> pos;    // pos[v] = position of vertex v; pos[0] unused

  int size() const { return static_cast<int>(order.size()); }
  int vertex_at(int p) const { return order[p - 1]; }
  int position_of(int v) const { return pos[v]; }

  static VertexOrdering from_order(std::vector<int> order) {
    int n = static_cast<int>(order.size());
    VertexOrdering d;
    d.pos.assign(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
      int v = order[p - 1];
      if (v < 1 || v > n || d.pos[v] != 0)
        throw std::invalid_argument("VertexOrdering: not a bijection");
      d.pos[v] = p;
    }
    d.order = std::move(order);
    return d;
  }

  static VertexOrdering identity(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    return from_order(std::move(order));
  }
};

struct TriangulationResult {
  VertexOrdering ordering;
  std::vector<std::pair<int, int>> fill_edges;  // u < v, ascending
  std::vector<int> lower_degree;  // lower_degree[v] = |E'_{pos(v)}|; [0] unused
  int induced_width = 0;
};

namespace detail {

// Working copy of the presence structure for elimination simulations.
struct EliminationGraph {
  int n;
  std::vector<std::uint8_t> adj;  // (n+1)^2 flat
  std::vector<int> degree;
  std::vector<char> alive;

  explicit EliminationGraph(const Graph& g)
      : n(g.vertex_count()),
        adj(static_cast<std::size_t>(n + 1) * (n + 1), 0),
        degree(n + 1, 0),
        alive(n + 1, 1) {
    for (auto [u, v] : g.edges()) {
      adj[cell(u, v)] = adj[cell(v, u)] = 1;
      ++degree[u];
      ++degree[v];
    }
  }

  std::size_t cell(int u, int v) const {
    return static_cast<std::size_t>(u) * (n + 1) + v;
  }
  bool connected(int u, int v) const { return adj[cell(u, v)] != 0; }

  std::vector<int> alive_neighbours(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n; ++u)
      if (alive[u] && u != v && connected(u, v)) out.push_back(u);
    return out;
  }

  int fill_in(int v) const {
    std::vector<int> nb = alive_neighbours(v);
    int missing = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!connected(nb[a], nb[b])) ++missing;
    return missing;
  }

  // Removes v, pairwise-connecting its remaining neighbours.
  void eliminate(int v) {
    std::vector<int> nb = alive_neighbours(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!connected(nb[a], nb[b])) {
          adj[cell(nb[a], nb[b])] = adj[cell(nb[b], nb[a])] = 1;
          ++degree[nb[a]];
          ++degree[nb[b]];
        }
    for (int u : nb) --degree[u];
    alive[v] = 0;
  }
};

template <typename Score>
VertexOrdering eliminate_by(const Graph& g, Score score, bool dynamic) {
  int n = g.vertex_count();
  EliminationGraph work(g);
  std::vector<long long> static_score(n + 1);
  if (!dynamic)
    for (int v = 1; v <= n; ++v) static_score[v] = score(work, v);
  std::vector<int> order(n, 0);
  std::vector<char> nearby(n + 1, 0);  // vertices whose score must refresh
  std::vector<long long> cached(n + 1, -1);
  for (int next = n; next >= 1; --next) {  // first pick -> highest position
    int best = 0;
    long long best_score = 0;
    for (int v = 1; v <= n; ++v) {
      if (!work.alive[v]) continue;
      long long s;
      if (!dynamic) {
        s = static_score[v];
      } else {
        if (cached[v] < 0 || nearby[v]) {
          cached[v] = score(work, v);
          nearby[v] = 0;
        }
        s = cached[v];
      }
      if (best == 0 || s < best_score) {
        best = v;
        best_score = s;
      }
    }
    order[next - 1] = best;
    if (dynamic) {
      // Only vertices adjacent to the eliminated one get rescored.
      for (int u : work.alive_neighbours(best)) nearby[u] = 1;
      work.eliminate(best);
    } else {
      work.alive[best] = 0;  // static scores never change
    }
  }
  return VertexOrdering::from_order(std::move(order));
}

}  // namespace detail

/// Maximum cardinality search: repeatedly pick the vertex with most
/// already-visited neighbours (lowest id on ties). The first pick takes
/// position 1, so the last-picked vertex sits at position n and is the one
/// the consistency sweep eliminates first; on a chordal graph the result is
/// a perfect elimination ordering.
inline VertexOrdering mcs_ordering(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(n + 1, 0);
  std::vector<char> numbered(n + 1, 0);
  std::vector<int> order(n, 0);
  for (int next = 1; next <= n; ++next) {
    int best = 0;
    for (int v = 1; v <= n; ++v)
      if (!numbered[v] && (best == 0 || weight[v] > weight[best])) best = v;
    order[next - 1] = best;
    numbered[best] = 1;
    for (int u : g.neighbours(best))
      if (!numbered[u]) ++weight[u];
  }
  return VertexOrdering::from_order(std::move(order));
}

inline VertexOrdering order_vertices(const Graph& g, Heuristic heuristic,
                                     std::uint64_t seed = 0) {
  switch (heuristic) {
    case Heuristic::MinDegree:
      return detail::eliminate_by(
          g, [](const detail::EliminationGraph& w, int v) -> long long {
            return w.degree[v];
          },
          /*dynamic=*/true);
    case Heuristic::MinFill:
      return detail::eliminate_by(
          g, [](const detail::EliminationGraph& w, int v) -> long long {
            return w.fill_in(v);
          },
          /*dynamic=*/true);
    case Heuristic::StaticMinDegree:
      return detail::eliminate_by(
          g, [](const detail::EliminationGraph& w, int v) -> long long {
            return w.degree[v];
          },
          /*dynamic=*/false);
    case Heuristic::StaticMinFill:
      return detail::eliminate_by(
          g, [](const detail::EliminationGraph& w, int v) -> long long {
            return w.fill_in(v);
          },
          /*dynamic=*/false);
    case Heuristic::Mcs:
      return mcs_ordering(g);
    case Heuristic::Random: {
      std::vector<int> order(g.vertex_count());
      std::iota(order.begin(), order.end(), 1);
      std::mt19937_64 rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
      return VertexOrdering::from_order(std::move(order));
    }
  }
  throw std::invalid_argument("order_vertices: unknown heuristic");
}

/// Structure-only consistency sweep: for k = n downto 1 the lower-positioned
/// neighbours of the vertex at position k are pairwise connected. Fill edges
/// and per-position lower-neighbour counts come out exactly as the
/// weight-relaxing sweep would produce them.
inline TriangulationResult triangulate(const Graph& g,
                                       const VertexOrdering& d) {
  int n = g.vertex_count();
  if (d.size() != n)
    throw std::invalid_argument("triangulate: ordering size mismatch");
  TriangulationResult result;
  result.ordering = d;
  result.lower_degree.assign(n + 1, 0);

  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  std::vector<std::vector<int>> nbrs(n + 1);
  auto cell = [n](int u, int v) {
    return static_cast<std::size_t>(u) * (n + 1) + v;
  };
  for (auto [u, v] : g.edges()) {
    adj[cell(u, v)] = adj[cell(v, u)] = 1;
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }

  std::vector<int> lower;
  for (int k = n; k >= 1; --k) {
    int v = d.vertex_at(k);
    lower.clear();
    for (int u : nbrs[v])
      if (d.position_of(u) < k) lower.push_back(u);
    result.lower_degree[v] = static_cast<int>(lower.size());
    result.induced_width =
        std::max(result.induced_width, result.lower_degree[v]);
    for (std::size_t a = 0; a < lower.size(); ++a)
      for (std::size_t b = a + 1; b < lower.size(); ++b) {
        int x = lower[a], y = lower[b];
        if (adj[cell(x, y)]) continue;
        adj[cell(x, y)] = adj[cell(y, x)] = 1;
        nbrs[x].push_back(y);
        nbrs[y].push_back(x);
        result.fill_edges.emplace_back(std::min(x, y), std::max(x, y));
      }
  }
  std::sort(result.fill_edges.begin(), result.fill_edges.end());
  return result;
}

/// True iff the lower-positioned neighbourhood of every vertex is a clique,
/// i.e. triangulating along d would add no fill edges.
inline bool is_perfect_elimination_ordering(const Graph& g,
                                            const VertexOrdering& d) {
  int n = g.vertex_count();
  std::vector<int> lower;
  for (int k = 1; k <= n; ++k) {
    int v = d.vertex_at(k);
    lower.clear();
    for (int u : g.neighbours(v))
      if (d.position_of(u) < k) lower.push_back(u);
    if (lower.size() <= 1) continue;
    int p = lower[0];
    for (int u : lower)
      if (d.position_of(u) > d.position_of(p)) p = u;
    for (int u : lower)
      if (u != p && !g.has_edge(u, p)) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& g) {
  return is_perfect_elimination_ordering(g, mcs_ordering(g));
}

}  // namespace treepath
