// treepath/bench.hpp - Measurement harness: timed solver runs with update
// counters, oracle differential validation, and manifest-driven sweeps that
// append CSV rows.
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "treepath/apsp.hpp"
#include "treepath/generators.hpp"
#include "treepath/graph.hpp"
#include "treepath/io.hpp"

namespace treepath {

enum class Algorithm { FloydWarshall, Johnson, Chleq, Snowball, SnowballSep };

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::FloydWarshall: return "FLOYD_WARSHALL";
    case Algorithm::Johnson: return "JOHNSON";
    case Algorithm::Chleq: return "CHLEQ";
    case Algorithm::Snowball: return "SNOWBALL";
    case Algorithm::SnowballSep: return "SNOWBALL_SEP";
  }
  return "?";
}

inline Algorithm algorithm_from_name(const std::string& name) {
  if (name == "FLOYD_WARSHALL") return Algorithm::FloydWarshall;
  if (name == "JOHNSON") return Algorithm::Johnson;
  if (name == "CHLEQ") return Algorithm::Chleq;
  if (name == "SNOWBALL") return Algorithm::Snowball;
  if (name == "SNOWBALL_SEP") return Algorithm::SnowballSep;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

inline bool algorithm_needs_ordering(Algorithm a) {
  return a == Algorithm::Chleq || a == Algorithm::Snowball ||
         a == Algorithm::SnowballSep;
}

inline std::string heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::MinDegree: return "MIN_DEGREE";
    case Heuristic::MinFill: return "MIN_FILL";
    case Heuristic::StaticMinDegree: return "STATIC_MIN_DEGREE";
    case Heuristic::StaticMinFill: return "STATIC_MIN_FILL";
    case Heuristic::Mcs: return "MCS";
    case Heuristic::Random: return "RANDOM";
  }
  return "?";
}

inline Heuristic heuristic_from_name(const std::string& name) {
  if (name == "MIN_DEGREE") return Heuristic::MinDegree;
  if (name == "MIN_FILL") return Heuristic::MinFill;
  if (name == "STATIC_MIN_DEGREE") return Heuristic::StaticMinDegree;
  if (name == "STATIC_MIN_FILL") return Heuristic::StaticMinFill;
  if (name == "MCS") return Heuristic::Mcs;
  if (name == "RANDOM") return Heuristic::Random;
  throw std::invalid_argument("unknown heuristic '" + name + "'");
}

inline std::string heap_name(HeapKind k) {
  return k == HeapKind::Binary ? "BINARY" : "FIBONACCI";
}

inline HeapKind heap_from_name(const std::string& name) {
  if (name == "BINARY") return HeapKind::Binary;
  if (name == "FIBONACCI") return HeapKind::Fibonacci;
  throw std::invalid_argument("unknown heap kind '" + name + "'");
}

// One measurement row. The CSV column order below is the stability
// contract; the median column sits next to the mean and stddev it belongs
// with.
struct BenchRecord {
  std::string instance_id;
  std::string family;
  int n = 0;
  int m = 0;
  int m_c = 0;
  int w_d = 0;
  int s_d = 0;
  std::string heuristic;  // empty when the algorithm takes no ordering
  std::string algorithm;
  std::string heap_kind;  // Johnson only
  std::uint64_t seed = 0;
  int repetitions = 0;
  double wall_time_mean = 0.0;
  double wall_time_stddev = 0.0;
  double wall_time_median = 0.0;
  std::uint64_t update_count = 0;
  std::string status;  // OK | INCONSISTENT | ERROR
};

inline std::string bench_csv_header() {
  return "instance_id,family,n,m,m_c,w_d,s_d,heuristic,algorithm,heap_kind,"
         "seed,repetitions,wall_time_mean,wall_time_stddev,wall_time_median,"
         "update_count,status";
}

inline std::string format_seconds(double s) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

inline std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.m << ','
      << r.m_c << ',' << r.w_d << ',' << r.s_d << ',' << r.heuristic << ','
      << r.algorithm << ',' << r.heap_kind << ',' << r.seed << ','
      << r.repetitions << ',' << format_seconds(r.wall_time_mean) << ','
      << format_seconds(r.wall_time_stddev) << ','
      << format_seconds(r.wall_time_median) << ',' << r.update_count << ','
      << r.status;
  return out.str();
}

struct SolveConfig {
  Algorithm algorithm = Algorithm::Snowball;
  std::optional<Heuristic> heuristic;  // required by the ordering-based three
  HeapKind heap = HeapKind::Fibonacci;
  int repetitions = 10;
  std::uint64_t ordering_seed = 0;  // feeds the RANDOM heuristic
};

/// One solver invocation; ordering construction is the caller's business so
/// it can sit inside the timed region.
inline std::optional<ApspResult> run_algorithm(const Graph& g,
                                               Algorithm algorithm,
                                               const VertexOrdering* ordering,
                                               HeapKind heap) {
  switch (algorithm) {
    case Algorithm::FloydWarshall: return floyd_warshall(g);
    case Algorithm::Johnson: return johnson(g, heap);
    case Algorithm::Chleq: return chleq_apsp(g, *ordering);
    case Algorithm::Snowball: return snowball(g, *ordering);
    case Algorithm::SnowballSep: return snowball_separators(g, *ordering);
  }
  throw std::invalid_argument("run_algorithm: unknown algorithm");
}

struct InstanceDescriptors {
  int m = 0, m_c = 0, w_d = 0, s_d = 0;
};

/// (m, m_c, w_d, s_d) under the given heuristic. Reported for every row,
/// following the convention that instance tables describe width via the
/// triangulation actually benchmarked (or min-degree when none is).
inline InstanceDescriptors describe_instance(const Graph& g,
                                             Heuristic heuristic,
                                             std::uint64_t seed) {
  InstanceDescriptors out;
  out.m = g.edge_count();
  VertexOrdering d = order_vertices(g, heuristic, seed);
  TriangulationResult tri = triangulate(g, d);
  out.m_c = out.m + static_cast<int>(tri.fill_edges.size());
  out.w_d = tri.induced_width;
  Graph filled = g;
  for (auto [u, v] : tri.fill_edges) filled.add_edge(u, v);
  out.s_d = separator_stats(build_clique_tree(filled, d)).s_d;
  return out;
}

/// Runs the configured solver `repetitions` times (after one untimed warm-up
/// run) and collects wall times and the update counter. The timed region
/// includes ordering construction for the ordering-based algorithms,
/// matching the measurement rule that triangulation time counts.
inline BenchRecord run_benchmark(const Graph& g, const std::string& instance_id,
                                 const std::string& family,
                                 std::uint64_t instance_seed,
                                 const SolveConfig& config) {
  if (algorithm_needs_ordering(config.algorithm) && !config.heuristic)
    throw std::invalid_argument(
        "run_benchmark: " + algorithm_name(config.algorithm) +
        " needs a heuristic");
  if (config.repetitions < 1)
    throw std::invalid_argument("run_benchmark: repetitions must be >= 1");

  BenchRecord record;
  record.instance_id = instance_id;
  record.family = family;
  record.n = g.vertex_count();
  record.seed = instance_seed;
  record.repetitions = config.repetitions;
  record.algorithm = algorithm_name(config.algorithm);
  if (config.heuristic) record.heuristic = heuristic_name(*config.heuristic);
  if (config.algorithm == Algorithm::Johnson)
    record.heap_kind = heap_name(config.heap);

  Heuristic descriptor_heuristic =
      config.heuristic.value_or(Heuristic::MinDegree);
  InstanceDescriptors desc =
      describe_instance(g, descriptor_heuristic, config.ordering_seed);
  record.m = desc.m;
  record.m_c = desc.m_c;
  record.w_d = desc.w_d;
  record.s_d = desc.s_d;

  auto solve_once = [&]() -> std::optional<ApspResult> {
    if (algorithm_needs_ordering(config.algorithm)) {
      VertexOrdering d =
          order_vertices(g, *config.heuristic, config.ordering_seed);
      return run_algorithm(g, config.algorithm, &d, config.heap);
    }
    return run_algorithm(g, config.algorithm, nullptr, config.heap);
  };

  solve_once();  // warm-up
  std::vector<double> times;
  times.reserve(config.repetitions);
  bool consistent = true;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    std::optional<ApspResult> result = solve_once();
    auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
    if (result) {
      record.update_count = result->update_count;
    } else {
      consistent = false;
      record.update_count = 0;
    }
  }
  record.status = consistent ? "OK" : "INCONSISTENT";

  double sum = 0.0;
  for (double t : times) sum += t;
  record.wall_time_mean = sum / times.size();
  double var = 0.0;
  for (double t : times) var += (t - record.wall_time_mean) *
                                 (t - record.wall_time_mean);
  record.wall_time_stddev =
      times.size() > 1 ? std::sqrt(var / (times.size() - 1)) : 0.0;
  std::sort(times.begin(), times.end());
  std::size_t h = times.size() / 2;
  record.wall_time_median = (times.size() % 2)
                                ? times[h]
                                : (times[h - 1] + times[h]) / 2.0;
  return record;
}

struct ValidationOutcome {
  bool pass = false;
  std::string detail;
};

/// Entrywise comparison against the brute-force oracle; exact equality, and
/// inconsistency reports must agree. `matrix` empty means the solver said
/// INCONSISTENT.
inline ValidationOutcome compare_to_oracle(
    const Graph& g, const std::optional<DistanceMatrix>& matrix) {
  std::optional<DistanceMatrix> expected = oracle_apsp(g);
  if (!expected && !matrix) return {true, "both report INCONSISTENT"};
  if (!expected)
    return {false, "oracle reports INCONSISTENT, solver returned a matrix"};
  if (!matrix)
    return {false, "solver reports INCONSISTENT, oracle returned a matrix"};
  int n = g.vertex_count();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if ((*matrix)(i, j) != (*expected)(i, j)) {
        std::ostringstream detail;
        detail << "first difference at (" << i << "," << j << "): got "
               << format_weight((*matrix)(i, j)) << ", oracle "
               << format_weight((*expected)(i, j));
        return {false, detail.str()};
      }
  return {true, "matrix matches oracle"};
}

/// Oracle differential check of one algorithm on one instance. The size
/// guard keeps the quadratic-times-Bellman-Ford oracle affordable.
inline ValidationOutcome validate_instance(const Graph& g, Algorithm algorithm,
                                           std::optional<Heuristic> heuristic,
                                           HeapKind heap = HeapKind::Fibonacci,
                                           std::uint64_t ordering_seed = 0,
                                           int oracle_guard = 2000) {
  if (g.vertex_count() > oracle_guard)
    throw std::invalid_argument("validate_instance: instance exceeds oracle "
                                "guard of n <= " +
                                std::to_string(oracle_guard));
  std::optional<ApspResult> result;
  if (algorithm_needs_ordering(algorithm)) {
    if (!heuristic)
      throw std::invalid_argument("validate_instance: " +
                                  algorithm_name(algorithm) +
                                  " needs a heuristic");
    VertexOrdering d = order_vertices(g, *heuristic, ordering_seed);
    result = run_algorithm(g, algorithm, &d, heap);
  } else {
    result = run_algorithm(g, algorithm, nullptr, heap);
  }
  std::optional<DistanceMatrix> matrix;
  if (result) matrix = std::move(result->dist);
  return compare_to_oracle(g, matrix);
}

// One sweep configuration line:
//   family key=value ... algorithms=A,B heuristics=H1,H2 reps=10 seeds=0..9
// Optional heaps=BINARY,FIBONACCI applies to JOHNSON rows (default
// FIBONACCI). Blank lines and # comments are skipped.
struct SweepLine {
  InstanceSpec spec;
  std::uint64_t seed_lo = 0, seed_hi = 0;
  std::vector<Algorithm> algorithms;
  std::vector<Heuristic> heuristics;
  std::vector<HeapKind> heaps{HeapKind::Fibonacci};
  int repetitions = 10;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace detail

inline SweepLine parse_sweep_line(const std::string& line) {
  std::istringstream in(line);
  std::string family;
  if (!(in >> family))
    throw std::invalid_argument("sweep: empty configuration line");
  SweepLine out;
  out.spec.family = family_from_name(family);
  std::string token;
  while (in >> token) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sweep: expected key=value, got '" + token +
                                  "'");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "n") out.spec.n = std::stoi(value);
    else if (key == "width") out.spec.width = std::stoi(value);
    else if (key == "sep") out.spec.sep_size = std::stoi(value);
    else if (key == "attachment") out.spec.attachment = std::stoi(value);
    else if (key == "count") out.spec.diamonds = std::stoi(value);
    else if (key == "path-len") out.spec.path_len = std::stoi(value);
    else if (key == "jobs") out.spec.jobs = std::stoi(value);
    else if (key == "machines") out.spec.machines = std::stoi(value);
    else if (key == "tasks") out.spec.tasks = std::stoi(value);
    else if (key == "branching") out.spec.branching = std::stoi(value);
    else if (key == "depth") out.spec.depth = std::stoi(value);
    else if (key == "landmarks") out.spec.landmark_ratio = std::stod(value);
    else if (key == "siblings") out.spec.sibling_prob = std::stod(value);
    else if (key == "weight-hi") out.spec.weight_hi = std::stod(value);
    else if (key == "reps") out.repetitions = std::stoi(value);
    else if (key == "seeds") {
      std::size_t dots = value.find("..");
      if (dots == std::string::npos) {
        out.seed_lo = out.seed_hi = std::stoull(value);
      } else {
        out.seed_lo = std::stoull(value.substr(0, dots));
        out.seed_hi = std::stoull(value.substr(dots + 2));
      }
      if (out.seed_hi < out.seed_lo)
        throw std::invalid_argument("sweep: empty seed range");
    } else if (key == "algorithms") {
      out.algorithms.clear();
      for (const std::string& a : detail::split(value, ','))
        out.algorithms.push_back(algorithm_from_name(a));
    } else if (key == "heuristics") {
      out.heuristics.clear();
      for (const std::string& h : detail::split(value, ','))
        out.heuristics.push_back(heuristic_from_name(h));
    } else if (key == "heaps") {
      out.heaps.clear();
      for (const std::string& h : detail::split(value, ','))
        out.heaps.push_back(heap_from_name(h));
    } else {
      throw std::invalid_argument("sweep: unknown key '" + key + "'");
    }
  }
  if (out.algorithms.empty())
    throw std::invalid_argument("sweep: line lists no algorithms");
  return out;
}

inline std::string sweep_instance_id(const InstanceSpec& spec) {
  std::string id = describe(spec);
  for (char& c : id)
    if (c == ' ') c = '_';
  return id;
}

/// Executes the full cross-product of a manifest: seeds x algorithms x
/// heuristics (x heaps for Johnson). Rows are appended and flushed one at a
/// time so partial sweeps stay usable; a failing row is recorded with
/// status ERROR and the sweep continues.
inline int run_sweep(std::istream& manifest, std::ostream& csv,
                     bool write_header = true, std::ostream* log = nullptr) {
  if (write_header) csv << bench_csv_header() << "\n" << std::flush;
  int rows = 0;
  std::string line;
  while (std::getline(manifest, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    SweepLine sweep = parse_sweep_line(line);
    for (std::uint64_t seed = sweep.seed_lo; seed <= sweep.seed_hi; ++seed) {
      InstanceSpec spec = sweep.spec;
      spec.seed = seed;
      std::string id = sweep_instance_id(spec);
      Graph instance;
      try {
        instance = make_instance(spec);
      } catch (const std::exception& e) {
        BenchRecord record;
        record.instance_id = id;
        record.family = family_name(spec.family);
        record.seed = seed;
        record.status = "ERROR";
        csv << to_csv_row(record) << "\n" << std::flush;
        ++rows;
        if (log) *log << "sweep instance failed: " << e.what() << "\n";
        continue;
      }
      for (Algorithm algorithm : sweep.algorithms) {
        std::vector<std::optional<Heuristic>> heuristic_choices;
        if (algorithm_needs_ordering(algorithm)) {
          if (sweep.heuristics.empty())
            throw std::invalid_argument("sweep: " + algorithm_name(algorithm) +
                                        " rows need heuristics=");
          for (Heuristic h : sweep.heuristics) heuristic_choices.push_back(h);
        } else if (!sweep.heuristics.empty()) {
          for (Heuristic h : sweep.heuristics) heuristic_choices.push_back(h);
        } else {
          heuristic_choices.push_back(std::nullopt);
        }
        std::vector<HeapKind> heap_choices =
            algorithm == Algorithm::Johnson
                ? sweep.heaps
                : std::vector<HeapKind>{HeapKind::Fibonacci};
        for (const auto& heuristic : heuristic_choices)
          for (HeapKind heap : heap_choices) {
            SolveConfig config;
            config.algorithm = algorithm;
            config.heuristic = heuristic;
            config.heap = heap;
            config.repetitions = sweep.repetitions;
            config.ordering_seed = seed;
            BenchRecord record;
            try {
              record = run_benchmark(instance, id, family_name(spec.family),
                                     seed, config);
            } catch (const std::exception& e) {
              record.instance_id = id;
              record.family = family_name(spec.family);
              record.n = instance.vertex_count();
              record.m = instance.edge_count();
              record.algorithm = algorithm_name(algorithm);
              if (heuristic) record.heuristic = heuristic_name(*heuristic);
              record.seed = seed;
              record.status = "ERROR";
              if (log) *log << "sweep row failed: " << e.what() << "\n";
            }
            csv << to_csv_row(record) << "\n" << std::flush;
            ++rows;
          }
      }
    }
  }
  return rows;
}

}  // namespace treepath
