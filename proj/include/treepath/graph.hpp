// treepath/graph.hpp - Directed weighted graph with an undirected edge
// relation, plus the distance-matrix type shared by all solvers.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace treepath {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One directed arc. Vertices are 1-based everywhere in this library.
struct Arc {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(int n, T fill)
      : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1), fill) {}

  int size() const { return n_; }
  bool empty() const { return cells_.empty(); }

  T operator()(int i, int j) const { return cells_[index(i, j)]; }
  T& operator()(int i, int j) { return cells_[index(i, j)]; }

  const T* row(int i) const { return cells_.data() + index(i, 0); }
  T* row(int i) { return cells_.data() + index(i, 0); }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (n_ + 1) + j;
  }

  int n_ = 0;
  std::vector<T> cells_;
};

// An edge {u,v} is a symmetric presence bit plus two directed weights.
// Either direction may be +inf; fill edges produced by triangulation start
// out that way. Weights are never NaN or -inf.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    present_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    weight_.assign(static_cast<std::size_t>(n + 1) * (n + 1), kInf);
    adjacency_.assign(n + 1, {});
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return present_[cell(u, v)] != 0;
  }

  /// w_{u->v}; +inf when the pair is absent or the direction unconstrained.
  double weight(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return weight_[cell(u, v)];
  }

  const std::vector<int>& neighbours(int v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  /// Adds the unordered pair {u,v} with both directed weights +inf.
  /// Returns false (and changes nothing) if the pair is already present.
  bool add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (present_[cell(u, v)]) return false;
    present_[cell(u, v)] = 1;
    present_[cell(v, u)] = 1;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++m_;
    return true;
  }

  void set_weight(int u, int v, double w) {
    if (!has_edge(u, v))
      throw std::invalid_argument("Graph: set_weight on absent edge");
    if (std::isnan(w) || w == -kInf)
      throw std::invalid_argument("Graph: weight must be real or +inf");
    weight_[cell(u, v)] = w;
  }

  /// Unordered present pairs, u < v, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (present_[cell(u, v)]) out.emplace_back(u, v);
    return out;
  }

  /// All directed arcs with finite weight, ascending (from, to).
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v)
        if (u != v && present_[cell(u, v)] && weight_[cell(u, v)] < kInf)
          out.push_back({u, v, weight_[cell(u, v)]});
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && present_ == other.present_ &&
           weight_ == other.weight_;
  }

 private:
  std::size_t cell(int u, int v) const {
    return static_cast<std::size_t>(u) * (n_ + 1) + v;
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n_));
  }

  int n_ = 0;
  int m_ = 0;  // unordered pairs
  std::vector<std::uint8_t> present_;
  std::vector<double> weight_;
  std::vector<std::vector<int>> adjacency_;
};

/// Builds a graph from directed arcs. The reverse direction of every pair
/// defaults to +inf. Rejects out-of-range vertices, self-loops and duplicate
/// ordered arcs.
inline Graph from_edges(int n, const std::vector<Arc>& arcs) {
  Graph g(n);
  std::vector<std::uint64_t> seen;
  seen.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.from < 1 || a.from > n || a.to < 1 || a.to > n)
      throw std::invalid_argument("from_edges: vertex out of range");
    if (a.from == a.to) throw std::invalid_argument("from_edges: self-loop");
    if (std::isnan(a.weight) || a.weight == -kInf)
      throw std::invalid_argument("from_edges: weight must be real or +inf");
    seen.push_back(static_cast<std::uint64_t>(a.from) * (n + 1) + a.to);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("from_edges: duplicate ordered arc");
  for (const Arc& a : arcs) {
    g.add_edge(a.from, a.to);
    g.set_weight(a.from, a.to, a.weight);
  }
  return g;
}

// n x n shortest-distance values; dist(i,i) = 0. The optional midpoint
// matrix records the last interior vertex written at the final improving
// update, 0 meaning "none" (direct hop).
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(int n) : n_(n), dist_(n, kInf) {
    for (int i = 1; i <= n; ++i) dist_(i, i) = 0.0;
  }

  int size() const { return n_; }

  double operator()(int i, int j) const { return dist_(i, j); }
  double& operator()(int i, int j) { return dist_(i, j); }

  const double* row(int i) const { return dist_.row(i); }
  double* row(int i) { return dist_.row(i); }

  void enable_midpoints() {
    if (mid_.empty()) mid_ = SquareMatrix<std::int32_t>(n_, 0);
  }
  bool has_midpoints() const { return !mid_.empty(); }
  int midpoint(int i, int j) const { return mid_(i, j); }
  void set_midpoint(int i, int j, int m) { mid_(i, j) = m; }

 private:
  int n_ = 0;
  SquareMatrix<double> dist_;
  SquareMatrix<std::int32_t> mid_;
};

inline bool exactly_equal(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.size() != b.size()) return false;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Largest |a-b| over all entries; +inf entries must match exactly or the
/// result is +inf.
inline double max_abs_difference(const DistanceMatrix& a,
                                 const DistanceMatrix& b) {
  double worst = 0.0;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) {
      double x = a(i, j), y = b(i, j);
      if (x == y) continue;
      if (x == kInf || y == kInf) return kInf;
      worst = std::max(worst, std::abs(x - y));
    }
  return worst;
}

/// Count of min-update statements executed by a solver.
struct UpdateCounter {
  std::uint64_t relaxations = 0;
};

/// Components of the undirected presence relation. Each component is sorted
/// ascending; components are ordered by their smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> label(n + 1, 0);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int s = 1; s <= n; ++s) {
    if (label[s]) continue;
    components.emplace_back();
    int id = static_cast<int>(components.size());
    label[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      components.back().push_back(v);
      for (int u : g.neighbours(v))
        if (!label[u]) {
          label[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(components.back().begin(), components.back().end());
  }
  return components;
}

/// Induced subgraph on the first `size` vertices visited by a breadth-first
/// search that ignores arc direction, renumbered 1..k in visit order.
/// Neighbours are expanded in ascending id. If no start vertex is given, one
/// is drawn uniformly from the seed. Fewer than `size` vertices come back
/// when the start component is smaller.
inline Graph bfs_subgraph(const Graph& g, std::optional<int> start, int size,
                          std::uint64_t seed = 0) {
  int n = g.vertex_count();
  if (size < 0 || size > n)
    throw std::invalid_argument("bfs_subgraph: size out of range");
  if (n == 0 || size == 0) return Graph(0);
  int s;
  if (start) {
    s = *start;
    if (s < 1 || s > n)
      throw std::invalid_argument("bfs_subgraph: start out of range");
  } else {
    std::mt19937_64 rng(seed);
    s = static_cast<int>(rng() % n) + 1;
  }

  std::vector<int> visit_order;
  std::vector<char> visited(n + 1, 0);
  std::vector<int> queue{s};
  visited[s] = 1;
  for (std::size_t head = 0;
       head < queue.size() && static_cast<int>(visit_order.size()) < size;
       ++head) {
    int v = queue[head];
    visit_order.push_back(v);
    std::vector<int> nbrs = g.neighbours(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (int u : nbrs)
      if (!visited[u]) {
        visited[u] = 1;
        queue.push_back(u);
      }
  }

  int k = static_cast<int>(visit_order.size());
  std::vector<int> new_id(n + 1, 0);
  for (int i = 0; i < k; ++i) new_id[visit_order[i]] = i + 1;

  Graph sub(k);
  for (int i = 0; i < k; ++i) {
    int v = visit_order[i];
    for (int u : g.neighbours(v)) {
      if (!new_id[u] || u < v) continue;  // add each pair once
      sub.add_edge(new_id[v], new_id[u]);
      sub.set_weight(new_id[v], new_id[u], g.weight(v, u));
      sub.set_weight(new_id[u], new_id[v], g.weight(u, v));
    }
  }
  return sub;
}

}  // namespace treepath
