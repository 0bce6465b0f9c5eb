// treepath/clique_tree.hpp - Clique trees of chordal graphs: construction
// from a perfect elimination ordering, structural validation, and separator
// statistics.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treepath/graph.hpp"
#include "treepath/ordering.hpp"

namespace treepath {

struct CliqueTree {
  struct Node {
    std::vector<int> vertices;  // ascending; a maximal clique of the graph
  };
  struct Edge {
    int a = 0;
    int b = 0;
    std::vector<int> separator;  // ascending; = intersection of the two nodes
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<int> roots;           // one node index per tree component
  std::vector<int> node_of_vertex;  // node whose clique covers the vertex

  /// Node adjacency (indices into `edges` are not needed by callers; this
  /// gives neighbouring node ids directly).
  std::vector<std::vector<int>> node_adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const Edge& e : edges) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    return adj;
  }
};

struct NotChordalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds a clique tree by sweeping the elimination ordering from position 1
/// upward. Each vertex's candidate clique is itself plus its
/// lower-positioned neighbours; a candidate equal to the clique already
/// covering its highest lower neighbour grows that clique instead of opening
/// a new node, otherwise a new node is linked to the covering clique with
/// the candidate's lower neighbourhood as separator. Throws NotChordalError
/// when the ordering exposes a missing chord.
inline CliqueTree build_clique_tree(const Graph& g, const VertexOrdering& d) {
  int n = g.vertex_count();
  if (d.size() != n)
    throw std::invalid_argument("build_clique_tree: ordering size mismatch");
  CliqueTree tree;
  tree.node_of_vertex.assign(n + 1, -1);

  std::vector<int> lower;
  for (int k = 1; k <= n; ++k) {
    int v = d.vertex_at(k);
    lower.clear();
    for (int u : g.neighbours(v))
      if (d.position_of(u) < k) lower.push_back(u);

    if (lower.empty()) {
      tree.nodes.push_back({{v}});
      tree.node_of_vertex[v] = static_cast<int>(tree.nodes.size()) - 1;
      continue;
    }

    int p = lower[0];
    for (int u : lower)
      if (d.position_of(u) > d.position_of(p)) p = u;
    for (int u : lower)
      if (u != p && !g.has_edge(u, p))
        throw NotChordalError("ordering is not a perfect elimination "
                              "ordering: vertices " +
                              std::to_string(u) + " and " + std::to_string(p) +
                              " miss a chord");

    int host = tree.node_of_vertex[p];
    if (tree.nodes[host].vertices.size() == lower.size()) {
      // The candidate is the host clique plus v: grow it in place.
      auto& set = tree.nodes[host].vertices;
      set.insert(std::upper_bound(set.begin(), set.end(), v), v);
      tree.node_of_vertex[v] = host;
    } else {
      CliqueTree::Node node;
      node.vertices = lower;
      node.vertices.push_back(v);
      std::sort(node.vertices.begin(), node.vertices.end());
      tree.nodes.push_back(std::move(node));
      int id = static_cast<int>(tree.nodes.size()) - 1;
      CliqueTree::Edge edge;
      edge.a = host;
      edge.b = id;
      edge.separator = lower;
      std::sort(edge.separator.begin(), edge.separator.end());
      tree.edges.push_back(std::move(edge));
      tree.node_of_vertex[v] = id;
    }
  }

  // Root each tree component at the node covering its highest-positioned
  // vertex (the vertex the consistency sweep processes first).
  std::vector<int> component(tree.nodes.size(), -1);
  auto adj = tree.node_adjacency();
  int components = 0;
  for (std::size_t s = 0; s < tree.nodes.size(); ++s) {
    if (component[s] >= 0) continue;
    int id = components++;
    std::vector<int> stack{static_cast<int>(s)};
    component[s] = id;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int nb : adj[c])
        if (component[nb] < 0) {
          component[nb] = id;
          stack.push_back(nb);
        }
    }
  }
  std::vector<int> top_vertex(components, 0);
  for (std::size_t c = 0; c < tree.nodes.size(); ++c)
    for (int v : tree.nodes[c].vertices) {
      int& best = top_vertex[component[c]];
      if (best == 0 || d.position_of(v) > d.position_of(best)) best = v;
    }
  tree.roots.resize(components);
  for (int c = 0; c < components; ++c)
    tree.roots[c] = tree.node_of_vertex[top_vertex[c]];
  return tree;
}

struct CliqueTreeValidation {
  bool ok = true;
  std::string violation;
};

namespace detail {
inline CliqueTreeValidation clique_tree_violation(const std::string& what) {
  return {false, what};
}
}  // namespace detail

/// Checks the structural clique-tree properties: tree shape, maximal-clique
/// nodes, coherence, full vertex cover, and separator annotations. Reports
/// the first violation found.
inline CliqueTreeValidation validate_clique_tree(const CliqueTree& t,
                                                 const Graph& g) {
  using detail::clique_tree_violation;
  int n = g.vertex_count();
  std::size_t node_count = t.nodes.size();

  // Tree shape: acyclic, |edges| = |nodes| - #components.
  std::vector<int> parent(node_count);
  for (std::size_t i = 0; i < node_count; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(node_count) ||
        e.b >= static_cast<int>(node_count))
      return clique_tree_violation("edge references unknown node");
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return clique_tree_violation("tree edges contain a cycle");
    parent[ra] = rb;
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < node_count; ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  if (t.edges.size() + components != node_count)
    return clique_tree_violation("edge count does not match a forest");

  // Property 2: every node is a maximal clique.
  std::vector<char> member(n + 1, 0);
  for (std::size_t c = 0; c < node_count; ++c) {
    const auto& set = t.nodes[c].vertices;
    if (set.empty()) return clique_tree_violation("empty clique node");
    for (int v : set)
      if (v < 1 || v > n)
        return clique_tree_violation("clique node mentions unknown vertex");
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b)
        if (!g.has_edge(set[a], set[b]))
          return clique_tree_violation(
              "Property 2: node " + std::to_string(c) + " is not a clique");
    for (int v : set) member[v] = 1;
    for (int w = 1; w <= n; ++w) {
      if (member[w]) continue;
      bool dominates = true;
      for (int v : set)
        if (!g.has_edge(w, v)) {
          dominates = false;
          break;
        }
      if (dominates)
        return clique_tree_violation(
            "Property 2: node " + std::to_string(c) + " is not maximal");
    }
    for (int v : set) member[v] = 0;
  }

  // Property 5: all vertices covered.
  std::vector<char> covered(n + 1, 0);
  for (const auto& node : t.nodes)
    for (int v : node.vertices) covered[v] = 1;
  for (int v = 1; v <= n; ++v)
    if (!covered[v])
      return clique_tree_violation("Property 5: vertex " + std::to_string(v) +
                                   " appears in no clique");

  // Separator annotations must equal the node intersections.
  for (const auto& e : t.edges) {
    std::vector<int> inter;
    std::set_intersection(t.nodes[e.a].vertices.begin(),
                          t.nodes[e.a].vertices.end(),
                          t.nodes[e.b].vertices.begin(),
                          t.nodes[e.b].vertices.end(),
                          std::back_inserter(inter));
    if (inter != e.separator)
      return clique_tree_violation("separator annotation mismatch");
  }

  // Property 3: the nodes containing any vertex induce a connected subtree.
  auto adj = t.node_adjacency();
  std::vector<char> contains(node_count, 0), seen(node_count, 0);
  for (int v = 1; v <= n; ++v) {
    int start = -1, total = 0;
    for (std::size_t c = 0; c < node_count; ++c) {
      bool has = std::binary_search(t.nodes[c].vertices.begin(),
                                    t.nodes[c].vertices.end(), v);
      contains[c] = has;
      if (has) {
        ++total;
        start = static_cast<int>(c);
      }
    }
    if (total <= 1) continue;
    int reached = 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      ++reached;
      for (int nb : adj[c])
        if (contains[nb] && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    std::fill(seen.begin(), seen.end(), 0);
    if (reached != total)
      return clique_tree_violation("Property 3: nodes containing vertex " +
                                   std::to_string(v) + " are disconnected");
  }

  return {};
}

struct SeparatorStats {
  int s_d = 0;  // largest separator; 0 when the forest has no edges
  double median = 0.0;
  std::map<int, int> histogram;  // separator size -> count
};

inline SeparatorStats separator_stats(const CliqueTree& t) {
  SeparatorStats stats;
  std::vector<int> sizes;
  sizes.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    int s = static_cast<int>(e.separator.size());
    sizes.push_back(s);
    stats.s_d = std::max(stats.s_d, s);
    ++stats.histogram[s];
  }
  if (!sizes.empty()) {
    std::sort(sizes.begin(), sizes.end());
    std::size_t h = sizes.size() / 2;
    stats.median = (sizes.size() % 2) ? sizes[h]
                                      : (sizes[h - 1] + sizes[h]) / 2.0;
  }
  return stats;
}

/// Definition-4 check for one tree edge: removing the separator's vertices
/// from the graph must disconnect the vertex sets hanging off the two sides
/// of the edge.
inline bool edge_separator_disconnects(const CliqueTree& t, const Graph& g,
                                       std::size_t edge_index) {
  const auto& e = t.edges[edge_index];
  int n = g.vertex_count();

  // Split the tree by dropping the edge; collect node sides by flood fill.
  auto adj = t.node_adjacency();
  std::vector<char> side_a(t.nodes.size(), 0);
  std::vector<int> stack{e.a};
  side_a[e.a] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int nb : adj[c]) {
      if ((c == e.a && nb == e.b) || (c == e.b && nb == e.a)) continue;
      if (!side_a[nb]) {
        side_a[nb] = 1;
        stack.push_back(nb);
      }
    }
  }
  if (side_a[e.b]) return false;  // not a tree edge at all

  std::vector<char> in_sep(n + 1, 0);
  for (int v : e.separator) in_sep[v] = 1;
  std::vector<char> a_side(n + 1, 0), b_side(n + 1, 0);
  for (std::size_t c = 0; c < t.nodes.size(); ++c)
    for (int v : t.nodes[c].vertices)
      (side_a[c] ? a_side : b_side)[v] = 1;

  // BFS from A-side vertices avoiding the separator; B-side must stay dry.
  std::vector<char> seen(n + 1, 0);
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v)
    if (a_side[v] && !in_sep[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (b_side[v] && !in_sep[v]) return false;
    for (int u : g.neighbours(v))
      if (!seen[u] && !in_sep[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  }
  for (int v = 1; v <= n; ++v)
    if (seen[v] && b_side[v] && !in_sep[v]) return false;
  return true;
}

}  // namespace treepath
