// tests/acceptance_main.cpp - The acceptance suite: one pass/fail line per
// criterion, exit code = number of failed gating criteria. Run it through
// ctest (-R acceptance) or directly; everything it checks is also reachable
// through the CLI's validate and sweep subcommands.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "treepath/treepath.hpp"

using namespace treepath;

namespace {

std::mt19937_64 master_rng(0x5eedf00d);

struct CheckContext {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::vector<std::string> csv_fields(const std::string& row) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(row);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

// ---------------------------------------------------------------------------
// criterion 1: oracle equivalence
// ---------------------------------------------------------------------------

void check_solver_set(const Graph& g, const VertexOrdering& d,
                      CheckContext& ctx, const std::string& label) {
  auto expected = oracle_apsp(g);
  auto verify = [&](const char* name,
                    const std::optional<ApspResult>& result) {
    if (result.has_value() != expected.has_value()) {
      ctx.fail(label + ": " + name + " disagrees with oracle on consistency");
      return;
    }
    if (expected && !exactly_equal(result->dist, *expected))
      ctx.fail(label + ": " + name + " matrix differs from oracle");
  };
  verify("chleq", chleq_apsp(g, d));
  verify("snowball", snowball(g, d));
  verify("snowball_sep", snowball_separators(g, d));
  verify("floyd_warshall", floyd_warshall(g));
  verify("johnson_binary", johnson(g, HeapKind::Binary));
  verify("johnson_fibonacci", johnson(g, HeapKind::Fibonacci));
}

bool criterion_oracle_equivalence(CheckContext& ctx) {
  // 10,000 sampled tiny graphs, integer weights in [-3, 3].
  int inconsistent = 0;
  for (int trial = 0; trial < 10000 && ctx.ok; ++trial) {
    int n = 1 + trial % 5;
    Graph g = test_support::random_graph(n, 0.6, -3, 3, master_rng);
    VertexOrdering d = test_support::random_ordering(n, master_rng);
    if (!oracle_apsp(g)) ++inconsistent;
    check_solver_set(g, d, ctx, "tiny#" + std::to_string(trial));
  }
  ctx.note(std::to_string(inconsistent) + "/10000 tiny graphs inconsistent");

  // 1,000 seeded instances across the six generator families.
  for (int trial = 0; trial < 1000 && ctx.ok; ++trial) {
    Graph g = test_support::random_family_instance(trial % 6, 9000 + trial);
    Heuristic h = trial % 3 == 0   ? Heuristic::MinDegree
                  : trial % 3 == 1 ? Heuristic::Mcs
                                   : Heuristic::Random;
    VertexOrdering d = order_vertices(g, h, trial);
    check_solver_set(g, d, ctx, "family#" + std::to_string(trial));
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 2: fill-edge equivalence of triangulate and the weighted sweep
// ---------------------------------------------------------------------------

bool criterion_fill_equivalence(CheckContext& ctx) {
  for (int trial = 0; trial < 500 && ctx.ok; ++trial) {
    int n = 4 + static_cast<int>(master_rng() % 97);
    Graph g = test_support::random_graph(n, 2.5 / n + 0.05, 0, 9, master_rng);
    VertexOrdering d = test_support::random_ordering(n, master_rng);
    auto swept = dpc(g, d);
    if (!swept) {
      ctx.fail("nonnegative instance reported inconsistent");
      break;
    }
    if (swept->fill_edges != triangulate(g, d).fill_edges)
      ctx.fail("fill sets differ on trial " + std::to_string(trial));
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 3: chordality and width of the filled graph
// ---------------------------------------------------------------------------

bool criterion_chordality_width(CheckContext& ctx) {
  for (int trial = 0; trial < 200 && ctx.ok; ++trial) {
    Graph g;
    if (trial % 2) {
      g = test_support::random_family_instance(trial % 6, 500 + trial);
    } else {
      int n = 5 + static_cast<int>(master_rng() % 56);
      g = test_support::random_graph(n, 0.2, 0, 9, master_rng);
    }
    VertexOrdering d =
        trial % 3 ? order_vertices(g, Heuristic::MinDegree)
                  : test_support::random_ordering(g.vertex_count(), master_rng);
    auto swept = dpc(g, d);
    if (!swept) {
      ctx.fail("consistent instance reported inconsistent");
      break;
    }
    if (!is_chordal(swept->graph)) {
      ctx.fail("filled graph is not chordal on trial " +
               std::to_string(trial));
      break;
    }
    if (test_support::max_clique_size(swept->graph) !=
        swept->induced_width + 1)
      ctx.fail("width+1 != largest clique on trial " + std::to_string(trial));
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 4: clique-tree properties and separator disconnection
// ---------------------------------------------------------------------------

bool criterion_clique_tree(CheckContext& ctx) {
  for (int trial = 0; trial < 200 && ctx.ok; ++trial) {
    std::uint64_t seed = 40000 + trial;
    Graph g;
    if (trial % 2) {
      int width = 2 + static_cast<int>(master_rng() % 12);
      int n = width + 2 + static_cast<int>(master_rng() % (198 - width));
      g = gen_chordal(n, width, seed);
    } else {
      int width = 2 + static_cast<int>(master_rng() % 10);
      int sep = 1 + static_cast<int>(master_rng() % width);
      int fresh = width + 1 - sep;
      int blocks = 1 + static_cast<int>(master_rng() % 20);
      int n = width + 1 + blocks * fresh;
      if (n > 200) n = width + 1 + ((200 - width - 1) / fresh) * fresh;
      g = gen_chordal_bounded_sep(n, width, sep, seed);
    }
    VertexOrdering d = order_vertices(g, Heuristic::Mcs);
    TriangulationResult tri = triangulate(g, d);
    if (!tri.fill_edges.empty()) {
      ctx.fail("chordal instance produced fill under its perfect ordering");
      break;
    }
    CliqueTree tree = build_clique_tree(g, d);
    CliqueTreeValidation check = validate_clique_tree(tree, g);
    if (!check.ok) {
      ctx.fail("validation: " + check.violation);
      break;
    }
    if (separator_stats(tree).s_d > tri.induced_width) {
      ctx.fail("s_d exceeds w_d");
      break;
    }
    for (std::size_t e = 0; e < tree.edges.size(); ++e)
      if (!edge_separator_disconnects(tree, g, e)) {
        ctx.fail("separator fails to disconnect its sides");
        break;
      }
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 5: update-count ordering on bounded-separator instances
// ---------------------------------------------------------------------------

bool criterion_update_counts(CheckContext& ctx) {
  // The tiling constraint of the generator admits n = 128 only for widths 8
  // and 64; widths 16 and 32 use the nearest feasible size (122, 126).
  struct Point {
    int width, n;
  };
  std::vector<Point> points{{8, 128}, {16, 122}, {32, 126}, {64, 128}};
  std::ostringstream manifest;
  for (const Point& p : points)
    manifest << "chordal-sep n=" << p.n << " width=" << p.width
             << " sep=2 algorithms=SNOWBALL,SNOWBALL_SEP "
                "heuristics=MIN_DEGREE reps=1 seeds=0..9\n";
  std::istringstream manifest_in(manifest.str());
  std::ostringstream csv;
  run_sweep(manifest_in, csv);

  // instance_id -> (snowball total, snowball_sep total), grouped by the
  // requested width (parsed back out of the id; the reported w_d may drift
  // upward when min-degree is not perfect on a seed).
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;
  std::map<std::string, int> width_of;
  std::istringstream rows(csv.str());
  std::string row;
  std::getline(rows, row);  // header
  while (std::getline(rows, row)) {
    auto fields = csv_fields(row);
    if (fields[16] != "OK") {
      ctx.fail("sweep row not OK: " + row);
      return false;
    }
    std::uint64_t updates = std::stoull(fields[15]);
    std::size_t at = fields[0].find("width=");
    width_of[fields[0]] = std::stoi(fields[0].substr(at + 6));
    if (fields[8] == "SNOWBALL") counts[fields[0]].first = updates;
    else counts[fields[0]].second = updates;
  }

  int wins = 0, total = 0;
  std::map<int, double> ratio_sum;
  std::map<int, int> ratio_count;
  for (const auto& [id, pair] : counts) {
    ++total;
    if (pair.second < pair.first) ++wins;
    int w = width_of[id];
    ratio_sum[w] += static_cast<double>(pair.second) / pair.first;
    ++ratio_count[w];
  }
  if (total != 40) {
    ctx.fail("expected 40 instances, saw " + std::to_string(total));
    return false;
  }
  if (wins * 100 < total * 95)
    ctx.fail("separator variant won only " + std::to_string(wins) + "/40");

  // The relative gap must shrink as width grows: the count ratio moves
  // toward 1 between the narrowest and widest settings.
  double first_ratio = ratio_sum[8] / ratio_count[8];
  double last_ratio = ratio_sum[64] / ratio_count[64];
  std::ostringstream ratios;
  ratios.setf(std::ios::fixed);
  ratios.precision(3);
  ratios << "mean count ratios sep/snowball:";
  for (const auto& [w, sum] : ratio_sum)
    ratios << " w" << w << "=" << sum / ratio_count[w];
  ctx.note(ratios.str() + "; wins " + std::to_string(wins) + "/40");
  if (last_ratio <= first_ratio)
    ctx.fail("relative gap did not shrink with width");
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 6: generator structural claims
// ---------------------------------------------------------------------------

bool criterion_generator_claims(CheckContext& ctx) {
  for (std::uint64_t seed = 0; seed < 50 && ctx.ok; ++seed) {
    int count = 3 + static_cast<int>(seed % 10);
    int path_len = 2 + static_cast<int>(seed % 3);
    Graph g = gen_diamonds(count, path_len, seed);
    VertexOrdering d = order_vertices(g, Heuristic::MinDegree);
    if (triangulate(g, d).induced_width != 2)
      ctx.fail("diamonds width != 2 at seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 50 && ctx.ok; ++seed) {
    int branching = 4 + static_cast<int>(seed % 4);
    int depth = 3 + static_cast<int>(seed % 5);
    double landmark_ratio = 0.1 * (seed % 6);
    double sibling_prob = 0.1 * (seed % 6);
    int tasks = 40 + static_cast<int>(seed % 40);
    Graph g = gen_htn(tasks, branching, depth, landmark_ratio, sibling_prob,
                      seed);
    int landmarks = static_cast<int>(landmark_ratio * tasks);
    VertexOrdering d = order_vertices(g, Heuristic::MinDegree);
    if (triangulate(g, d).induced_width > 2 * branching + landmarks + 1)
      ctx.fail("task-network width bound violated at seed " +
               std::to_string(seed));
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 7: the snowball counter formula
// ---------------------------------------------------------------------------

bool criterion_counter_formula(CheckContext& ctx) {
  for (int trial = 0; trial < 100 && ctx.ok; ++trial) {
    Graph g = trial % 2 ? test_support::random_family_instance(
                              trial % 6, 60000 + trial)
                        : test_support::random_graph(
                              5 + static_cast<int>(master_rng() % 40), 0.3, 0,
                              9, master_rng);
    VertexOrdering d =
        trial % 2 ? order_vertices(g, Heuristic::MinDegree)
                  : test_support::random_ordering(g.vertex_count(),
                                                  master_rng);
    auto result = snowball(g, d);
    if (!result) {
      ctx.fail("consistent instance reported inconsistent");
      break;
    }
    TriangulationResult tri = triangulate(g, d);
    std::uint64_t expected = 0;
    for (int k = 1; k <= g.vertex_count(); ++k)
      expected +=
          2ull * tri.lower_degree[d.vertex_at(k)] * (k - 1);
    if (result->update_count - result->preprocessing_updates != expected)
      ctx.fail("sweep counter deviates from the closed form on trial " +
               std::to_string(trial));
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 8: heap differential and reweighting
// ---------------------------------------------------------------------------

bool criterion_heaps(CheckContext& ctx) {
  for (std::uint64_t seed = 0; seed < 1000 && ctx.ok; ++seed) {
    std::mt19937_64 rng(seed * 2654435761ull + 1);
    std::vector<HeapCommand> trace;
    trace.reserve(10000);
    // Sorted reference: the set of live keys plus the current key per id.
    // Live keys are kept pairwise distinct; extraction order among equal
    // keys is unspecified, so a trace with ties could legally make one heap
    // extract an id the other still holds, and DECREASE on an extracted id
    // is an error by contract.
    std::set<double> reference;
    std::vector<double> key_of;
    std::vector<int> live_ids;
    std::vector<double> expected;
    for (int step = 0; step < 10000; ++step) {
      int roll = static_cast<int>(rng() % 100);
      if (live_ids.empty() || roll < 45) {
        double key;
        do key = static_cast<double>(rng() % (1ull << 40));
        while (reference.count(key));
        int id = static_cast<int>(key_of.size());
        trace.push_back(HeapCommand::insert(id, key));
        key_of.push_back(key);
        live_ids.push_back(id);
        reference.insert(key);
      } else if (roll < 78) {
        int id = live_ids[rng() % live_ids.size()];
        double lower = key_of[id] - static_cast<double>(1 + rng() % 5000);
        while (reference.count(lower)) --lower;
        trace.push_back(HeapCommand::decrease(id, lower));
        reference.erase(key_of[id]);
        reference.insert(lower);
        key_of[id] = lower;
      } else {
        trace.push_back(HeapCommand::extract());
        double min_key = *reference.begin();
        reference.erase(reference.begin());
        expected.push_back(min_key);
        for (std::size_t i = 0; i < live_ids.size(); ++i)
          if (key_of[live_ids[i]] == min_key) {
            live_ids.erase(live_ids.begin() + i);
            break;
          }
      }
    }
    auto binary = heap_trace(HeapKind::Binary, trace);
    auto fibonacci = heap_trace(HeapKind::Fibonacci, trace);
    if (binary.size() != expected.size() ||
        fibonacci.size() != expected.size()) {
      ctx.fail("extraction counts differ at seed " + std::to_string(seed));
      break;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (binary[i].second != expected[i] ||
          fibonacci[i].second != expected[i]) {
        ctx.fail("key sequence mismatch at seed " + std::to_string(seed));
        break;
      }
  }

  for (int family = 0; family < 6 && ctx.ok; ++family) {
    Graph g = test_support::random_family_instance(family, 123 + family);
    auto h = super_source_potentials(g);
    if (!h) {
      ctx.fail("generated instance failed the consistency probe");
      break;
    }
    for (const Arc& a : g.arcs())
      if (a.weight + (*h)[a.from - 1] - (*h)[a.to - 1] < 0) {
        ctx.fail("negative reweighted arc");
        break;
      }
  }
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 9: wall-time trend on fixed-width instances
// ---------------------------------------------------------------------------

bool criterion_time_trend(CheckContext& ctx) {
  std::ostringstream manifest;
  for (int n : {400, 800, 1600})
    manifest << "chordal n=" << n
             << " width=20 algorithms=SNOWBALL,CHLEQ,JOHNSON,FLOYD_WARSHALL "
                "heuristics=MIN_DEGREE heaps=FIBONACCI reps=3 seeds=0..0\n";
  std::istringstream manifest_in(manifest.str());
  std::ostringstream csv;
  run_sweep(manifest_in, csv);

  std::map<int, std::map<std::string, double>> medians;  // n -> alg -> s
  std::istringstream rows(csv.str());
  std::string row;
  std::getline(rows, row);
  while (std::getline(rows, row)) {
    auto fields = csv_fields(row);
    if (fields[16] != "OK") {
      ctx.fail("sweep row not OK: " + row);
      return false;
    }
    medians[std::stoi(fields[2])][fields[8]] = std::stod(fields[14]);
  }

  std::ostringstream report;
  report.setf(std::ios::fixed);
  report.precision(3);
  for (auto& [n, by_alg] : medians)
    report << " n=" << n << " [SNOWBALL " << by_alg["SNOWBALL"] << "s, CHLEQ "
           << by_alg["CHLEQ"] << "s, JOHNSON " << by_alg["JOHNSON"]
           << "s, FLOYD_WARSHALL " << by_alg["FLOYD_WARSHALL"] << "s]";
  auto& top = medians[1600];
  bool four_way = top["SNOWBALL"] < top["CHLEQ"] &&
                  top["CHLEQ"] < top["JOHNSON"] &&
                  top["JOHNSON"] < top["FLOYD_WARSHALL"];
  ctx.note("medians:" + report.str() +
           (four_way ? "; full four-way ordering holds"
                     : "; full four-way ordering reported only"));
  if (!(top["SNOWBALL"] < top["FLOYD_WARSHALL"]))
    ctx.fail("snowball is not faster than floyd-warshall at n=1600");
  return ctx.ok;
}

// ---------------------------------------------------------------------------
// criterion 10 (reported, not gating): wall-time of the two snowballs
// ---------------------------------------------------------------------------

bool criterion_snowball_variants(CheckContext& ctx) {
  std::vector<InstanceSpec> specs(6);
  specs[0].family = Family::Chordal;
  specs[0].n = 500;
  specs[0].width = 20;
  specs[1].family = Family::ChordalBoundedSep;
  specs[1].n = 512;
  specs[1].width = 16;
  specs[1].sep_size = 2;
  specs[2].family = Family::ScaleFree;
  specs[2].n = 400;
  specs[2].attachment = 3;
  specs[3].family = Family::Diamonds;
  specs[3].diamonds = 100;
  specs[3].path_len = 3;
  specs[4].family = Family::JobShop;
  specs[4].jobs = 14;
  specs[4].machines = 14;
  specs[5].family = Family::Htn;
  specs[5].tasks = 200;
  specs[5].branching = 5;
  specs[5].depth = 5;
  specs[5].landmark_ratio = 0.1;
  specs[5].sibling_prob = 0.2;

  int plain_wins = 0;
  std::ostringstream report;
  for (InstanceSpec& spec : specs) {
    spec.seed = 17;
    Graph g = make_instance(spec);
    SolveConfig config;
    config.heuristic = Heuristic::MinDegree;
    config.repetitions = 3;
    config.algorithm = Algorithm::Snowball;
    BenchRecord plain = run_benchmark(g, "a", family_name(spec.family),
                                      spec.seed, config);
    config.algorithm = Algorithm::SnowballSep;
    BenchRecord with_sep = run_benchmark(g, "b", family_name(spec.family),
                                         spec.seed, config);
    bool faster = plain.wall_time_median < with_sep.wall_time_median;
    plain_wins += faster;
    report << " " << family_name(spec.family)
           << (faster ? ": snowball faster" : ": separator variant faster");
  }
  ctx.note("snowball won " + std::to_string(plain_wins) + "/6 families;" +
           report.str());
  return true;  // reported, never gates
}

struct Criterion {
  int id;
  std::string title;
  bool gating;
  std::function<bool(CheckContext&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "oracle equivalence of all solvers", true,
       criterion_oracle_equivalence},
      {2, "fill edges of the weighted sweep match triangulate", true,
       criterion_fill_equivalence},
      {3, "filled graphs are chordal with width+1 = largest clique", true,
       criterion_chordality_width},
      {4, "clique-tree properties and separator disconnection", true,
       criterion_clique_tree},
      {5, "separator traversal needs fewer updates, gap shrinking", true,
       criterion_update_counts},
      {6, "generator structural claims (diamonds, task networks)", true,
       criterion_generator_claims},
      {7, "snowball counter equals its closed form", true,
       criterion_counter_formula},
      {8, "heap differential and nonnegative reweighting", true,
       criterion_heaps},
      {9, "wall-time trend: snowball beats floyd-warshall at n=1600", true,
       criterion_time_trend},
      {10, "snowball vs separator variant wall time (reported)", false,
       criterion_snowball_variants},
  };

  int gating_failures = 0;
  for (Criterion& criterion : criteria) {
    CheckContext ctx;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = criterion.run(ctx);
    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    if (!ok && criterion.gating) ++gating_failures;
    std::printf("criterion %2d: %s — %s [%.1fs]%s%s\n", criterion.id,
                ok ? "PASS" : (criterion.gating ? "FAIL" : "REPORT"),
                criterion.title.c_str(), seconds,
                ctx.detail.empty() ? "" : " | ",
                ctx.detail.c_str());
    std::fflush(stdout);
  }
  if (gating_failures)
    std::printf("%d gating criteria failed\n", gating_failures);
  else
    std::printf("all gating criteria passed\n");
  return gating_failures;
}
