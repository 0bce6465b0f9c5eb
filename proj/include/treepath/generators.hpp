// treepath/generators.hpp - Seeded construction of the benchmark families.
// Generators build structure only, marking every intended arc direction with
// a placeholder weight of 0; assign_weights then turns a structure into a
// weighted instance that is guaranteed free of negative cycles.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "treepath/graph.hpp"

namespace treepath {

enum class Family {
  Chordal,
  ChordalBoundedSep,
  ScaleFree,
  Diamonds,
  JobShop,
  Htn,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Chordal: return "chordal";
    case Family::ChordalBoundedSep: return "chordal-sep";
    case Family::ScaleFree: return "scale-free";
    case Family::Diamonds: return "diamonds";
    case Family::JobShop: return "jobshop";
    case Family::Htn: return "htn";
  }
  return "?";
}

inline Family family_from_name(const std::string& name) {
  if (name == "chordal") return Family::Chordal;
  if (name == "chordal-sep") return Family::ChordalBoundedSep;
  if (name == "scale-free") return Family::ScaleFree;
  if (name == "diamonds") return Family::Diamonds;
  if (name == "jobshop") return Family::JobShop;
  if (name == "htn") return Family::Htn;
  throw std::invalid_argument("unknown family '" + name + "'");
}

struct InstanceSpec {
  Family family = Family::Chordal;
  std::uint64_t seed = 0;
  double weight_lo = 0.0;  // kept for provenance; slack draws use [0, hi]
  double weight_hi = 100.0;

  int n = 100;           // chordal, chordal-sep, scale-free
  int width = 10;        // chordal, chordal-sep
  int sep_size = 2;      // chordal-sep
  int attachment = 2;    // scale-free
  int diamonds = 10;     // diamonds
  int path_len = 2;      // diamonds
  int jobs = 4;          // jobshop
  int machines = 4;      // jobshop
  int tasks = 50;        // htn
  int branching = 4;     // htn
  int depth = 4;         // htn
  double landmark_ratio = 0.0;  // htn
  double sibling_prob = 0.0;    // htn
};

namespace detail {

// Structure-building helpers: presence plus a 0 placeholder on each intended
// direction.
inline void mark_arc(Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) g.add_edge(u, v);
  g.set_weight(u, v, 0.0);
}

inline void mark_both(Graph& g, int u, int v) {
  mark_arc(g, u, v);
  g.set_weight(v, u, 0.0);
}

}  // namespace detail

/// Weights from random vertex potentials plus nonnegative slack:
/// w_{u->v} = h(v) - h(u) + slack(u, v) on every direction the structure
/// marked. Potentials telescope around every directed cycle, so each cycle
/// weighs the sum of its slacks >= 0, while individual arcs may well be
/// negative. Potentials are integers in [0, 100] and slacks integers in
/// [0, round(weight_hi)], keeping all weights exact.
inline Graph assign_weights(const Graph& structure, const InstanceSpec& spec) {
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
  int n = structure.vertex_count();
  std::uniform_int_distribution<int> potential(0, 100);
  long long hi = std::llround(std::max(0.0, spec.weight_hi));
  std::uniform_int_distribution<long long> slack(0, hi);
  std::vector<int> h(n + 1, 0);
  for (int v = 1; v <= n; ++v) h[v] = potential(rng);
  Graph g = structure;
  for (auto [u, v] : g.edges()) {
    if (g.weight(u, v) < kInf)
      g.set_weight(u, v, static_cast<double>(h[v] - h[u] + slack(rng)));
    if (g.weight(v, u) < kInf)
      g.set_weight(v, u, static_cast<double>(h[u] - h[v] + slack(rng)));
  }
  return g;
}

/// Randomized partial k-tree with k = target_width: a (k+1)-clique seed,
/// then every new vertex attaches to a uniformly chosen existing k-clique.
/// All arcs bidirectional.
inline Graph gen_chordal(int n, int target_width, std::uint64_t seed) {
  if (target_width < 1 || target_width >= n)
    throw std::invalid_argument("gen_chordal: need 1 <= width < n");
  int k = target_width;
  Graph g(n);
  for (int u = 1; u <= k + 1; ++u)
    for (int v = u + 1; v <= k + 1; ++v) detail::mark_both(g, u, v);

  std::mt19937_64 rng(seed);
  // Attachment sets, one per added vertex; the k-cliques of the graph are
  // the k-subsets of the maximal cliques and are enumerable as (creator,
  // dropped member) pairs without materializing them all.
  std::vector<std::vector<int>> attach_sets;
  for (int v = k + 2; v <= n; ++v) {
    std::uint64_t total =
        static_cast<std::uint64_t>(k + 1) + attach_sets.size() * k;
    std::uint64_t pick = rng() % total;
    std::vector<int> clique;
    if (pick < static_cast<std::uint64_t>(k + 1)) {
      // A k-subset of the seed clique: drop member (pick+1).
      for (int u = 1; u <= k + 1; ++u)
        if (u != static_cast<int>(pick) + 1) clique.push_back(u);
    } else {
      pick -= k + 1;
      const std::vector<int>& base = attach_sets[pick / k];
      std::size_t drop = pick % k;
      int creator = k + 2 + static_cast<int>(pick / k);
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != drop) clique.push_back(base[i]);
      clique.push_back(creator);
    }
    for (int u : clique) detail::mark_both(g, v, u);
    attach_sets.push_back(std::move(clique));
  }
  return g;
}

/// Chordal graph assembled directly as a clique tree: cliques of size
/// target_width+1, each new clique overlapping an existing one in exactly
/// sep_size vertices. Requires the clique sizes to tile n exactly.
inline Graph gen_chordal_bounded_sep(int n, int target_width, int sep_size,
                                     std::uint64_t seed) {
  if (target_width < 1 || sep_size < 1 || sep_size > target_width)
    throw std::invalid_argument(
        "gen_chordal_bounded_sep: need 1 <= sep_size <= width");
  int clique_size = target_width + 1;
  int fresh = clique_size - sep_size;
  if (n < clique_size || (n - clique_size) % fresh != 0)
    throw std::invalid_argument(
        "gen_chordal_bounded_sep: cliques cannot tile " + std::to_string(n) +
        " vertices (need n = width+1 + t*(width+1-sep))");

  std::mt19937_64 rng(seed);
  Graph g(n);
  std::vector<std::vector<int>> cliques;
  std::vector<int> first;
  for (int v = 1; v <= clique_size; ++v) first.push_back(v);
  for (int u : first)
    for (int v : first)
      if (u < v) detail::mark_both(g, u, v);
  cliques.push_back(first);

  int next_vertex = clique_size + 1;
  while (next_vertex <= n) {
    const std::vector<int>& base = cliques[rng() % cliques.size()];
    std::vector<int> shared = base;
    std::shuffle(shared.begin(), shared.end(), rng);
    shared.resize(sep_size);
    std::vector<int> clique = shared;
    for (int i = 0; i < fresh; ++i) clique.push_back(next_vertex++);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        detail::mark_both(g, clique[a], clique[b]);
    std::sort(clique.begin(), clique.end());
    cliques.push_back(std::move(clique));
  }
  return g;
}

/// Preferential attachment: a clique seed of `attachment` vertices, then
/// each new vertex connects to `attachment` distinct existing vertices
/// drawn with probability proportional to current degree. All arcs
/// bidirectional.
inline Graph gen_scale_free(int n, int attachment, std::uint64_t seed) {
  if (attachment < 1 || attachment >= n)
    throw std::invalid_argument("gen_scale_free: need 1 <= attachment < n");
  std::mt19937_64 rng(seed);
  Graph g(n);
  std::vector<int> urn;  // one entry per arc endpoint
  for (int u = 1; u <= attachment; ++u)
    for (int v = u + 1; v <= attachment; ++v) {
      detail::mark_both(g, u, v);
      urn.push_back(u);
      urn.push_back(v);
    }
  for (int v = attachment + 1; v <= n; ++v) {
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < attachment) {
      int u;
      if (urn.empty()) {
        u = static_cast<int>(rng() % (v - 1)) + 1;  // degree-0 start
      } else {
        u = urn[rng() % urn.size()];
      }
      if (u == v || std::find(chosen.begin(), chosen.end(), u) != chosen.end())
        continue;
      chosen.push_back(u);
    }
    for (int u : chosen) {
      detail::mark_both(g, v, u);
      urn.push_back(v);
      urn.push_back(u);
    }
  }
  return g;
}

/// A circular chain of diamonds: each diamond starts at a junction vertex,
/// runs two vertex-disjoint directed paths of path_len - 1 interior vertices
/// each, and converges on the next diamond's junction; the last junction
/// closes the cycle back to the first.
inline Graph gen_diamonds(int num_diamonds, int path_len, std::uint64_t seed) {
  (void)seed;  // the topology is fully determined by the parameters
  if (num_diamonds < 2 || path_len < 2)
    throw std::invalid_argument(
        "gen_diamonds: need num_diamonds >= 2 and path_len >= 2");
  int interior = path_len - 1;
  int n = num_diamonds * (1 + 2 * interior);
  Graph g(n);
  int next = num_diamonds + 1;  // junctions take ids 1..num_diamonds
  for (int d = 0; d < num_diamonds; ++d) {
    int source = d + 1;
    int sink = (d + 1) % num_diamonds + 1;
    for (int branch = 0; branch < 2; ++branch) {
      int prev = source;
      for (int i = 0; i < interior; ++i) {
        detail::mark_arc(g, prev, next);
        prev = next++;
      }
      detail::mark_arc(g, prev, sink);
    }
  }
  return g;
}

/// Job-shop skeleton: one vertex per operation start (jobs x machines) plus
/// a reference vertex chained to each job's first operation; operations of
/// one job form a directed chain, and every same-machine pair gets one arc
/// whose direction is the randomly selected disjunct.
inline Graph gen_jobshop(int jobs, int machines, std::uint64_t seed) {
  if (jobs < 1 || machines < 1)
    throw std::invalid_argument("gen_jobshop: need jobs, machines >= 1");
  std::mt19937_64 rng(seed);
  int n = jobs * machines + 1;
  int reference = n;
  Graph g(n);
  auto op = [machines](int job, int machine) {
    return job * machines + machine + 1;  // job, machine 0-based
  };
  for (int j = 0; j < jobs; ++j) {
    detail::mark_arc(g, reference, op(j, 0));
    for (int m = 0; m + 1 < machines; ++m)
      detail::mark_arc(g, op(j, m), op(j, m + 1));
  }
  for (int m = 0; m < machines; ++m)
    for (int a = 0; a < jobs; ++a)
      for (int b = a + 1; b < jobs; ++b) {
        if (rng() & 1)
          detail::mark_arc(g, op(a, m), op(b, m));
        else
          detail::mark_arc(g, op(b, m), op(a, m));
      }
  return g;
}

/// Sibling-restricted task-network skeleton with optional landmarks. Every
/// task is a (start, end) vertex pair; children connect start-to-start and
/// end-to-end with their parent; ordered sibling pairs get a directed
/// constraint independently with probability sibling_prob;
/// floor(landmark_ratio * tasks) landmark vertices each connect to 2-4
/// random task vertices.
inline Graph gen_htn(int tasks, int branching, int depth,
                     double landmark_ratio, double sibling_prob,
                     std::uint64_t seed) {
  if (tasks < 1 || branching < 1 || depth < 1)
    throw std::invalid_argument("gen_htn: need tasks, branching, depth >= 1");
  if (landmark_ratio < 0 || landmark_ratio > 1 || sibling_prob < 0 ||
      sibling_prob > 1)
    throw std::invalid_argument("gen_htn: ratios must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  int landmarks = static_cast<int>(landmark_ratio * tasks);
  int n = 2 * tasks + landmarks;
  Graph g(n);
  auto start_of = [](int task) { return 2 * task + 1; };  // task 0-based
  auto end_of = [](int task) { return 2 * task + 2; };

  std::vector<int> task_depth(tasks, 1);
  std::vector<std::vector<int>> children(tasks);
  for (int t = 0; t < tasks; ++t)
    detail::mark_both(g, start_of(t), end_of(t));

  // Grow the task tree breadth-first. The depth parameter caps the first
  // pass; if the capped tree cannot absorb the whole task budget, a second
  // pass keeps attaching to the so-far childless tasks so every task ends up
  // wired in while no parent ever exceeds the branching factor.
  int created = 1;
  for (int pass = 0; pass < 2 && created < tasks; ++pass)
    for (int parent = 0; parent < created && created < tasks; ++parent) {
      if (pass == 0 && task_depth[parent] >= depth) continue;
      if (pass == 1 && !children[parent].empty()) continue;
      for (int c = 0; c < branching && created < tasks; ++c) {
        int child = created++;
        task_depth[child] = task_depth[parent] + 1;
        children[parent].push_back(child);
        detail::mark_both(g, start_of(parent), start_of(child));
        detail::mark_both(g, end_of(child), end_of(parent));
      }
    }

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int parent = 0; parent < tasks; ++parent) {
    const auto& kids = children[parent];
    for (std::size_t a = 0; a < kids.size(); ++a)
      for (std::size_t b = a + 1; b < kids.size(); ++b)
        if (coin(rng) < sibling_prob)
          detail::mark_arc(g, end_of(kids[a]), start_of(kids[b]));
  }

  for (int l = 0; l < landmarks; ++l) {
    int v = 2 * tasks + l + 1;
    int fanout = 2 + static_cast<int>(rng() % 3);
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < fanout) {
      int t = static_cast<int>(rng() % (2 * tasks)) + 1;
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (int t : targets) detail::mark_both(g, v, t);
  }
  return g;
}

/// Structure for the spec's family: presence plus placeholder directions,
/// no weights yet.
inline Graph make_structure(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::Chordal:
      return gen_chordal(spec.n, spec.width, spec.seed);
    case Family::ChordalBoundedSep:
      return gen_chordal_bounded_sep(spec.n, spec.width, spec.sep_size,
                                     spec.seed);
    case Family::ScaleFree:
      return gen_scale_free(spec.n, spec.attachment, spec.seed);
    case Family::Diamonds:
      return gen_diamonds(spec.diamonds, spec.path_len, spec.seed);
    case Family::JobShop:
      return gen_jobshop(spec.jobs, spec.machines, spec.seed);
    case Family::Htn:
      return gen_htn(spec.tasks, spec.branching, spec.depth,
                     spec.landmark_ratio, spec.sibling_prob, spec.seed);
  }
  throw std::invalid_argument("make_structure: unknown family");
}

inline Graph make_instance(const InstanceSpec& spec) {
  return assign_weights(make_structure(spec), spec);
}

/// Human- and machine-readable parameter line, embedded as the leading
/// comment of generated instance files.
inline std::string describe(const InstanceSpec& spec) {
  std::string out = family_name(spec.family);
  auto add = [&out](const std::string& key, const std::string& value) {
    out += " " + key + "=" + value;
  };
  switch (spec.family) {
    case Family::Chordal:
      add("n", std::to_string(spec.n));
      add("width", std::to_string(spec.width));
      break;
    case Family::ChordalBoundedSep:
      add("n", std::to_string(spec.n));
      add("width", std::to_string(spec.width));
      add("sep", std::to_string(spec.sep_size));
      break;
    case Family::ScaleFree:
      add("n", std::to_string(spec.n));
      add("attachment", std::to_string(spec.attachment));
      break;
    case Family::Diamonds:
      add("count", std::to_string(spec.diamonds));
      add("path-len", std::to_string(spec.path_len));
      break;
    case Family::JobShop:
      add("jobs", std::to_string(spec.jobs));
      add("machines", std::to_string(spec.machines));
      break;
    case Family::Htn:
      add("tasks", std::to_string(spec.tasks));
      add("branching", std::to_string(spec.branching));
      add("depth", std::to_string(spec.depth));
      add("landmarks", std::to_string(spec.landmark_ratio));
      add("siblings", std::to_string(spec.sibling_prob));
      break;
  }
  add("weight-hi", std::to_string(std::llround(spec.weight_hi)));
  add("seed", std::to_string(spec.seed));
  return out;
}

}  // namespace treepath
