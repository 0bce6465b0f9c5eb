// treepath/apsp.hpp - All-pairs shortest-path solvers: the ordering-based
// family (Chleq-APSP, Snowball, Snowball-Separators) and the classical
// baselines (Floyd-Warshall, Johnson with two heap variants), all
// instrumented with update counters, plus path reconstruction from recorded
// midpoints.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "treepath/clique_tree.hpp"
#include "treepath/consistency.hpp"
#include "treepath/graph.hpp"
#include "treepath/heaps.hpp"
#include "treepath/oracle.hpp"
#include "treepath/ordering.hpp"

namespace treepath {

struct ApspOptions {
  bool record_midpoints = false;
};

struct ApspResult {
  DistanceMatrix dist;
  std::uint64_t update_count = 0;           // total, preprocessing included
  std::uint64_t preprocessing_updates = 0;  // consistency sweep / reweighting
  // Midpoints of the arcs of the triangulated graph, for expanding fill-edge
  // hops back into original arcs. Empty unless recording was requested.
  SquareMatrix<std::int32_t> arc_mid;
};

namespace detail {

// Position-space outgoing adjacency of a consistency-swept graph, split at
// the diagonal. lower[k] holds (position, weight vk->vj) pairs with j < k.
struct SweepAdjacency {
  std::vector<std::vector<std::pair<int, double>>> lower, higher;

  SweepAdjacency(const Graph& g, const VertexOrdering& d) {
    int n = g.vertex_count();
    lower.assign(n + 1, {});
    higher.assign(n + 1, {});
    for (int k = 1; k <= n; ++k) {
      int v = d.vertex_at(k);
      for (int u : g.neighbours(v)) {
        int j = d.position_of(u);
        (j < k ? lower : higher)[k].emplace_back(j, g.weight(v, u));
      }
      std::sort(lower[k].begin(), lower[k].end());
      std::sort(higher[k].begin(), higher[k].end());
    }
  }
};

inline void min_paths_sweep(const SweepAdjacency& adj, int n, int source_pos,
                            std::vector<double>& dist,
                            std::uint64_t& relaxations) {
  std::fill(dist.begin(), dist.end(), kInf);
  dist[source_pos] = 0.0;
  for (int k = source_pos; k >= 1; --k)
    for (auto [j, w] : adj.lower[k]) {
      ++relaxations;
      double cand = dist[k] + w;
      if (cand < dist[j]) dist[j] = cand;
    }
  for (int k = 1; k <= n; ++k)
    for (auto [j, w] : adj.higher[k]) {
      ++relaxations;
      double cand = dist[k] + w;
      if (cand < dist[j]) dist[j] = cand;
    }
}

}  // namespace detail

/// Single-source distances on a directionally path-consistent graph: one
/// sweep from the source's position down to 1 relaxing lower neighbours,
/// then one sweep from 1 to n relaxing higher neighbours. Returns a vector
/// indexed by vertex - 1.
inline std::vector<double> min_paths_sssp(const DpcGraph& g, int source,
                                          UpdateCounter* counter = nullptr) {
  int n = g.graph.vertex_count();
  if (source < 1 || source > n)
    throw std::invalid_argument("min_paths_sssp: source out of range");
  detail::SweepAdjacency adj(g.graph, g.ordering);
  std::vector<double> by_pos(n + 1, kInf);
  std::uint64_t count = 0;
  detail::min_paths_sweep(adj, n, g.ordering.position_of(source), by_pos,
                          count);
  if (counter) counter->relaxations += count;
  std::vector<double> out(n);
  for (int v = 1; v <= n; ++v) out[v - 1] = by_pos[g.ordering.position_of(v)];
  return out;
}

/// Consistency sweep, then one two-pass single-source run per vertex.
inline std::optional<ApspResult> chleq_apsp(const Graph& g,
                                            const VertexOrdering& d) {
  auto pre = dpc(g, d);
  if (!pre) return std::nullopt;
  int n = g.vertex_count();
  ApspResult result;
  result.dist = DistanceMatrix(n);
  result.preprocessing_updates = pre->counter.relaxations;
  std::uint64_t count = 0;

  detail::SweepAdjacency adj(pre->graph, d);
  std::vector<double> by_pos(n + 1, kInf);
  for (int s = 1; s <= n; ++s) {
    detail::min_paths_sweep(adj, n, d.position_of(s), by_pos, count);
    double* row = result.dist.row(s);
    for (int v = 1; v <= n; ++v) row[v] = by_pos[d.position_of(v)];
  }
  result.update_count = result.preprocessing_updates + count;
  return result;
}

/// Consistency sweep, then a forward pass growing a set of settled
/// positions: when position k joins, distances between k and everything
/// below are finalized by relaxing through k's lower neighbours only.
inline std::optional<ApspResult> snowball(const Graph& g,
                                          const VertexOrdering& d,
                                          const ApspOptions& options = {}) {
  auto pre = dpc(g, d, options.record_midpoints);
  if (!pre) return std::nullopt;
  int n = g.vertex_count();
  ApspResult result;
  result.dist = DistanceMatrix(n);
  result.preprocessing_updates = pre->counter.relaxations;
  if (options.record_midpoints) {
    result.dist.enable_midpoints();
    result.arc_mid = std::move(pre->arc_mid);
  }

  // Two mirrored position-space matrices keep both relaxations row-shaped:
  // to_k(k,i) = dist(i -> k) and from_k(k,i) = dist(k -> i). Finalized
  // columns are mirrored back so rows stay complete for later iterations.
  SquareMatrix<double> to_k(n, kInf), from_k(n, kInf);
  for (int p = 1; p <= n; ++p) to_k(p, p) = from_k(p, p) = 0.0;

  std::uint64_t count = 0;
  std::vector<int> lower;
  for (int k = 2; k <= n; ++k) {
    int vk = d.vertex_at(k);
    lower.clear();
    for (int u : pre->graph.neighbours(vk)) {
      int j = d.position_of(u);
      if (j < k) lower.push_back(j);
    }
    std::sort(lower.begin(), lower.end());

    double* tok = to_k.row(k);
    double* fromk = from_k.row(k);
    for (int j : lower) {
      int vj = d.vertex_at(j);
      double wjk = pre->graph.weight(vj, vk);
      double wkj = pre->graph.weight(vk, vj);
      const double* toj = to_k.row(j);
      const double* fromj = from_k.row(j);
      if (!options.record_midpoints) {
        for (int i = 1; i < k; ++i) {
          double into = toj[i] + wjk;
          if (into < tok[i]) tok[i] = into;
          double outof = wkj + fromj[i];
          if (outof < fromk[i]) fromk[i] = outof;
        }
      } else {
        for (int i = 1; i < k; ++i) {
          double into = toj[i] + wjk;
          if (into < tok[i]) {
            tok[i] = into;
            result.dist.set_midpoint(d.vertex_at(i), vk,
                                     i == j ? 0 : vj);
          }
          double outof = wkj + fromj[i];
          if (outof < fromk[i]) {
            fromk[i] = outof;
            result.dist.set_midpoint(vk, d.vertex_at(i),
                                     i == j ? 0 : vj);
          }
        }
      }
      count += 2 * static_cast<std::uint64_t>(k - 1);
    }
    for (int i = 1; i < k; ++i) {
      from_k(i, k) = tok[i];
      to_k(i, k) = fromk[i];
    }
  }

  for (int p = 1; p <= n; ++p) {
    const double* row = from_k.row(p);
    double* out = result.dist.row(d.vertex_at(p));
    for (int q = 1; q <= n; ++q) out[d.vertex_at(q)] = row[q];
  }
  result.update_count = result.preprocessing_updates + count;
  return result;
}

/// Partial path consistency, then a clique-tree traversal. Each node's new
/// vertices reach the already-visited part of the component only through
/// the separator to the node's parent, so relaxing through separator
/// members finalizes all new-to-visited distances. Children are visited
/// largest-separator-first (ties: lower node id).
inline std::optional<ApspResult> snowball_separators(const Graph& g,
                                                     const VertexOrdering& d) {
  auto ppc = p3c(g, d);
  if (!ppc) return std::nullopt;
  int n = g.vertex_count();
  ApspResult result;
  result.dist = DistanceMatrix(n);
  result.preprocessing_updates = ppc->counter.relaxations;
  DistanceMatrix& dist = result.dist;
  for (auto [u, v] : ppc->graph.edges()) {
    dist(u, v) = ppc->graph.weight(u, v);
    dist(v, u) = ppc->graph.weight(v, u);
  }

  CliqueTree tree = build_clique_tree(ppc->graph, d);
  std::vector<std::vector<std::pair<int, int>>> children_of(tree.nodes.size());
  for (const auto& e : tree.edges) {
    int s = static_cast<int>(e.separator.size());
    children_of[e.a].emplace_back(e.b, s);
    children_of[e.b].emplace_back(e.a, s);
  }

  struct Frontier {
    int separator_size;
    int node;
    bool operator<(const Frontier& other) const {
      if (separator_size != other.separator_size)
        return separator_size < other.separator_size;
      return node > other.node;
    }
  };

  std::uint64_t traversal_updates = 0;
  std::vector<char> vertex_visited(n + 1, 0);
  std::vector<char> node_visited(tree.nodes.size(), 0);
  std::vector<char> in_clique(n + 1, 0);
  std::vector<int> visited_list, fresh, settled, other;

  for (int root : tree.roots) {
    visited_list.clear();
    std::priority_queue<Frontier> frontier;
    frontier.push({0, root});
    while (!frontier.empty()) {
      int c = frontier.top().node;
      frontier.pop();
      if (node_visited[c]) continue;
      node_visited[c] = 1;

      const auto& members = tree.nodes[c].vertices;
      fresh.clear();
      settled.clear();
      for (int v : members) {
        in_clique[v] = 1;
        (vertex_visited[v] ? settled : fresh).push_back(v);
      }
      other.clear();
      for (int v : visited_list)
        if (!in_clique[v]) other.push_back(v);

      for (int i : fresh)
        for (int j : settled) {
          double out_ij = dist(i, j);
          double in_ji = dist(j, i);
          const double* row_j = dist.row(j);
          double* row_i = dist.row(i);
          for (int k : other) {
            traversal_updates += 2;
            double through = out_ij + row_j[k];
            if (through < row_i[k]) row_i[k] = through;
            double back = dist(k, j) + in_ji;
            if (back < dist(k, i)) dist(k, i) = back;
          }
        }

      for (int v : fresh) {
        vertex_visited[v] = 1;
        visited_list.push_back(v);
      }
      for (int v : members) in_clique[v] = 0;
      for (auto [child, sep] : children_of[c])
        if (!node_visited[child]) frontier.push({sep, child});
    }
  }

  result.update_count = result.preprocessing_updates + traversal_updates;
  return result;
}

/// Plain cubic baseline. The counter advances once per inner-loop statement
/// (n^3 in total); a negative diagonal entry afterwards signals a negative
/// cycle.
inline std::optional<ApspResult> floyd_warshall(const Graph& g,
                                                const ApspOptions& options = {}) {
  int n = g.vertex_count();
  ApspResult result;
  result.dist = DistanceMatrix(n);
  if (options.record_midpoints) result.dist.enable_midpoints();
  DistanceMatrix& dist = result.dist;
  for (const Arc& a : g.arcs()) dist(a.from, a.to) = a.weight;

  std::uint64_t count = 0;
  for (int k = 1; k <= n; ++k) {
    const double* row_k = dist.row(k);
    for (int i = 1; i <= n; ++i) {
      double d_ik = dist(i, k);
      double* row_i = dist.row(i);
      if (!options.record_midpoints) {
        for (int j = 1; j <= n; ++j) {
          double cand = d_ik + row_k[j];
          if (cand < row_i[j]) row_i[j] = cand;
        }
      } else {
        for (int j = 1; j <= n; ++j) {
          double cand = d_ik + row_k[j];
          if (cand < row_i[j]) {
            row_i[j] = cand;
            result.dist.set_midpoint(i, j, k);
          }
        }
      }
      count += n;
    }
  }
  result.update_count = count;
  for (int i = 1; i <= n; ++i)
    if (dist(i, i) < 0) return std::nullopt;
  return result;
}

namespace detail {

template <typename Heap>
void dijkstra(int n, int source,
              const std::vector<std::vector<std::pair<int, double>>>& out_arcs,
              std::vector<double>& dist, std::uint64_t& relaxations) {
  std::fill(dist.begin(), dist.end(), kInf);
  dist[source] = 0.0;
  Heap heap;
  for (int v = 1; v <= n; ++v) heap.insert(v, v == source ? 0.0 : kInf);
  while (!heap.empty()) {
    auto [u, key] = heap.extract_min();
    if (key == kInf) break;  // the rest is unreachable
    for (auto [v, w] : out_arcs[u]) {
      ++relaxations;
      double cand = dist[u] + w;
      if (cand < dist[v] && heap.contains(v)) {
        dist[v] = cand;
        heap.decrease_key(v, cand);
      }
    }
  }
}

}  // namespace detail

/// Bellman-Ford from a virtual source yields vertex potentials that make
/// every arc nonnegative; one Dijkstra per source on the reweighted graph
/// then recovers exact distances. Both heap kinds produce the same matrix.
inline std::optional<ApspResult> johnson(const Graph& g, HeapKind heap_kind) {
  int n = g.vertex_count();
  std::uint64_t preprocessing = 0;
  auto potentials = super_source_potentials(g, &preprocessing);
  if (!potentials) return std::nullopt;
  const std::vector<double>& h = *potentials;

  std::vector<std::vector<std::pair<int, double>>> out_arcs(n + 1);
  for (const Arc& a : g.arcs())
    out_arcs[a.from].emplace_back(a.to,
                                  a.weight + h[a.from - 1] - h[a.to - 1]);

  ApspResult result;
  result.dist = DistanceMatrix(n);
  result.preprocessing_updates = preprocessing;
  std::uint64_t count = 0;
  std::vector<double> reweighted(n + 1, kInf);
  for (int s = 1; s <= n; ++s) {
    if (heap_kind == HeapKind::Binary)
      detail::dijkstra<BinaryMinHeap>(n, s, out_arcs, reweighted, count);
    else
      detail::dijkstra<FibonacciMinHeap>(n, s, out_arcs, reweighted, count);
    double* row = result.dist.row(s);
    for (int v = 1; v <= n; ++v)
      row[v] = reweighted[v] == kInf ? kInf
                                     : reweighted[v] - h[s - 1] + h[v - 1];
  }
  result.update_count = preprocessing + count;
  return result;
}

struct PathResult {
  bool found = false;
  std::vector<int> vertices;
};

/// Expands the recorded midpoints into a concrete path in the original
/// graph: pair midpoints split matrix entries, arc midpoints split fill-edge
/// hops until only original arcs remain. Requires a solve with midpoint
/// recording. Throws std::logic_error if the expansion exceeds n^2 hops,
/// which no valid input can cause.
inline PathResult reconstruct_path(const ApspResult& result, int from,
                                   int to) {
  const DistanceMatrix& dist = result.dist;
  if (!dist.has_midpoints())
    throw std::invalid_argument("reconstruct_path: no midpoints recorded");
  int n = dist.size();
  if (from < 1 || from > n || to < 1 || to > n)
    throw std::invalid_argument("reconstruct_path: vertex out of range");
  if (from == to) return {true, {from}};
  if (dist(from, to) == kInf) return {};

  enum class Step { Pair, Hop };
  std::vector<std::pair<Step, std::pair<int, int>>> stack{
      {Step::Pair, {from, to}}};
  PathResult path{true, {from}};
  std::uint64_t budget = static_cast<std::uint64_t>(n) * n + 2;
  while (!stack.empty()) {
    if (budget-- == 0)
      throw std::logic_error("reconstruct_path: expansion exceeded guard");
    auto [step, pair] = stack.back();
    stack.pop_back();
    auto [u, v] = pair;
    if (step == Step::Pair) {
      int m = dist.midpoint(u, v);
      if (m != 0) {
        stack.push_back({Step::Pair, {m, v}});
        stack.push_back({Step::Pair, {u, m}});
      } else {
        stack.push_back({Step::Hop, {u, v}});
      }
    } else {
      int m = result.arc_mid.empty() ? 0 : result.arc_mid(u, v);
      if (m != 0) {
        stack.push_back({Step::Hop, {m, v}});
        stack.push_back({Step::Hop, {u, m}});
      } else {
        path.vertices.push_back(v);
      }
    }
  }
  return path;
}

}  // namespace treepath
