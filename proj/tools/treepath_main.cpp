// tools/treepath_main.cpp - Command-line harness: generate benchmark
// instances, compute orderings, run and time the solvers, check them against
// the brute-force oracle, and drive manifest sweeps into CSV.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "treepath/treepath.hpp"

namespace {

using namespace treepath;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidationFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Instances may be native ('#' comments, "n m" header) or DIMACS
// ('c'/'p'/'a' lines); the first non-blank line tells them apart.
Graph read_instance(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos) continue;
    char c = line[at];
    if (c == 'c' || c == 'p' || c == 'a') return read_dimacs(text);
    return read_native(text);
  }
  throw std::runtime_error("'" + path + "' is empty");
}

void write_instance_file(const Graph& g, const std::string& path,
                         const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_native(g, out, comments);
}

// Appends one CSV row, writing the header first when the file is new.
void append_csv_row(const std::string& path, const BenchRecord& record) {
  bool need_header = true;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0)
    need_header = false;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  if (need_header) out << bench_csv_header() << "\n";
  out << to_csv_row(record) << "\n";
}

struct GenerateCommon {
  std::uint64_t seed = 0;
  double weight_hi = 100.0;
  std::string out_path;
};

void add_generate_common(CLI::App* cmd, GenerateCommon& common) {
  cmd->add_option("--seed", common.seed, "instance seed")->capture_default_str();
  cmd->add_option("--weight-hi", common.weight_hi,
                  "upper end of the slack range used for weights")
      ->capture_default_str();
  cmd->add_option("--out", common.out_path, "output file (native format)")
      ->required();
}

void emit_instance(const InstanceSpec& spec, const std::string& out_path) {
  Graph instance = make_instance(spec);
  write_instance_file(instance, out_path, {describe(spec)});
  std::cout << "wrote " << out_path << " (n=" << instance.vertex_count()
            << ", m=" << instance.edge_count() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treepath: all-pairs shortest paths via vertex orderings, "
               "with generators and a benchmark harness"};
  app.require_subcommand(1);

  // ---- generate ----
  CLI::App* generate =
      app.add_subcommand("generate", "generate a benchmark instance");
  generate->require_subcommand(1);
  GenerateCommon common;
  InstanceSpec spec;

  CLI::App* chordal = generate->add_subcommand("chordal", "partial k-tree");
  chordal->add_option("--n", spec.n, "vertex count")->required();
  chordal->add_option("--width", spec.width, "target induced width")
      ->required();
  add_generate_common(chordal, common);

  CLI::App* chordal_sep = generate->add_subcommand(
      "chordal-sep", "chordal graph with bounded separators");
  chordal_sep->add_option("--n", spec.n, "vertex count")->required();
  chordal_sep->add_option("--width", spec.width, "target induced width")
      ->required();
  chordal_sep->add_option("--sep", spec.sep_size, "separator size")
      ->required();
  add_generate_common(chordal_sep, common);

  CLI::App* scale_free =
      generate->add_subcommand("scale-free", "preferential attachment");
  scale_free->add_option("--n", spec.n, "vertex count")->required();
  scale_free->add_option("--attachment", spec.attachment,
                         "edges per new vertex")
      ->required();
  add_generate_common(scale_free, common);

  CLI::App* diamonds =
      generate->add_subcommand("diamonds", "circular chain of diamonds");
  diamonds->add_option("--count", spec.diamonds, "number of diamonds")
      ->required();
  diamonds->add_option("--path-len", spec.path_len, "arcs per parallel path")
      ->required();
  add_generate_common(diamonds, common);

  CLI::App* jobshop =
      generate->add_subcommand("jobshop", "job-shop temporal network");
  jobshop->add_option("--jobs", spec.jobs, "number of jobs")->required();
  jobshop->add_option("--machines", spec.machines, "number of machines")
      ->required();
  add_generate_common(jobshop, common);

  CLI::App* htn =
      generate->add_subcommand("htn", "sibling-restricted task network");
  htn->add_option("--tasks", spec.tasks, "tasks in the tree")->required();
  htn->add_option("--branching", spec.branching, "children per task")
      ->required();
  htn->add_option("--depth", spec.depth, "tree depth")->required();
  htn->add_option("--landmarks", spec.landmark_ratio,
                  "landmark vertices as a ratio of tasks")
      ->capture_default_str();
  htn->add_option("--siblings", spec.sibling_prob,
                  "probability of a constraint between siblings")
      ->capture_default_str();
  add_generate_common(htn, common);

  std::string dimacs_path;
  int sub_size = 0;
  std::optional<int> sub_start;
  CLI::App* subgraph = generate->add_subcommand(
      "subgraph", "breadth-first subgraph of a DIMACS road network");
  subgraph->add_option("--dimacs", dimacs_path, "DIMACS .gr input file")
      ->required();
  subgraph->add_option("--size", sub_size, "vertices to keep")->required();
  int sub_start_value = 0;
  CLI::Option* start_opt = subgraph->add_option(
      "--start", sub_start_value, "start vertex (default: drawn from seed)");
  add_generate_common(subgraph, common);

  // ---- order ----
  CLI::App* order = app.add_subcommand(
      "order", "print a vertex ordering (position 1 first)");
  std::string in_path, heuristic_name_arg = "MIN_DEGREE", out_path;
  std::uint64_t run_seed = 0;
  order->add_option("--in", in_path, "instance file")->required();
  order->add_option("--heuristic", heuristic_name_arg, "ordering heuristic")
      ->capture_default_str();
  order->add_option("--seed", run_seed, "seed for the RANDOM heuristic")
      ->capture_default_str();
  order->add_option("--out", out_path, "write to file instead of stdout");

  // ---- solve ----
  CLI::App* solve =
      app.add_subcommand("solve", "time an algorithm and report a CSV row");
  std::string algorithm_arg, solve_heuristic, heap_arg = "FIBONACCI",
                             csv_path;
  int reps = 10;
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--algorithm", algorithm_arg,
                    "FLOYD_WARSHALL | JOHNSON | CHLEQ | SNOWBALL | "
                    "SNOWBALL_SEP")
      ->required();
  solve->add_option("--heuristic", solve_heuristic,
                    "ordering heuristic (required for CHLEQ, SNOWBALL, "
                    "SNOWBALL_SEP)");
  solve->add_option("--heap", heap_arg, "BINARY | FIBONACCI (JOHNSON)")
      ->capture_default_str();
  solve->add_option("--reps", reps, "timed repetitions")->capture_default_str();
  solve->add_option("--seed", run_seed, "seed for the RANDOM heuristic")
      ->capture_default_str();
  solve->add_option("--csv", csv_path, "append the row to this CSV file");

  // ---- validate ----
  CLI::App* validate = app.add_subcommand(
      "validate", "compare an algorithm's matrix to the brute-force oracle");
  validate->add_option("--in", in_path, "instance file")->required();
  validate->add_option("--algorithm", algorithm_arg, "algorithm to check")
      ->required();
  validate->add_option("--heuristic", solve_heuristic, "ordering heuristic");
  validate->add_option("--heap", heap_arg, "heap kind for JOHNSON")
      ->capture_default_str();
  validate->add_option("--seed", run_seed, "seed for the RANDOM heuristic")
      ->capture_default_str();

  // ---- sweep ----
  CLI::App* sweep =
      app.add_subcommand("sweep", "run a manifest of benchmark rows");
  std::string manifest_path;
  sweep->add_option("--manifest", manifest_path, "manifest file")->required();
  sweep->add_option("--csv", csv_path, "output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      spec.weight_hi = common.weight_hi;
      spec.seed = common.seed;
      if (*chordal) spec.family = Family::Chordal;
      if (*chordal_sep) spec.family = Family::ChordalBoundedSep;
      if (*scale_free) spec.family = Family::ScaleFree;
      if (*diamonds) spec.family = Family::Diamonds;
      if (*jobshop) spec.family = Family::JobShop;
      if (*htn) spec.family = Family::Htn;
      if (*subgraph) {
        Graph network = read_dimacs(read_file(dimacs_path));
        if (!start_opt->empty()) sub_start = sub_start_value;
        Graph sub = bfs_subgraph(network, sub_start, sub_size, common.seed);
        std::ostringstream comment;
        comment << "subgraph of " << dimacs_path << " size=" << sub_size
                << " seed=" << common.seed;
        write_instance_file(sub, common.out_path, {comment.str()});
        std::cout << "wrote " << common.out_path
                  << " (n=" << sub.vertex_count() << ", m=" << sub.edge_count()
                  << ")\n";
      } else {
        emit_instance(spec, common.out_path);
      }
      return kExitOk;
    }

    if (*order) {
      Graph g = read_instance(in_path);
      VertexOrdering d =
          order_vertices(g, heuristic_from_name(heuristic_name_arg), run_seed);
      std::ostringstream line;
      for (int p = 1; p <= d.size(); ++p) {
        if (p > 1) line << ' ';
        line << d.vertex_at(p);
      }
      line << '\n';
      if (out_path.empty()) {
        std::cout << line.str();
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << line.str();
      }
      return kExitOk;
    }

    if (*solve) {
      Graph g = read_instance(in_path);
      SolveConfig config;
      config.algorithm = algorithm_from_name(algorithm_arg);
      if (!solve_heuristic.empty())
        config.heuristic = heuristic_from_name(solve_heuristic);
      if (algorithm_needs_ordering(config.algorithm) && !config.heuristic) {
        std::cerr << "solve: " << algorithm_arg << " requires --heuristic\n";
        return kExitUsage;
      }
      config.heap = heap_from_name(heap_arg);
      config.repetitions = reps;
      config.ordering_seed = run_seed;
      std::string id = std::filesystem::path(in_path).stem().string();
      BenchRecord record = run_benchmark(g, id, "file", run_seed, config);
      std::cout << bench_csv_header() << "\n" << to_csv_row(record) << "\n";
      if (!csv_path.empty()) append_csv_row(csv_path, record);
      return kExitOk;
    }

    if (*validate) {
      Graph g = read_instance(in_path);
      Algorithm algorithm = algorithm_from_name(algorithm_arg);
      std::optional<Heuristic> heuristic;
      if (!solve_heuristic.empty())
        heuristic = heuristic_from_name(solve_heuristic);
      else if (algorithm_needs_ordering(algorithm))
        heuristic = Heuristic::MinDegree;
      ValidationOutcome outcome = validate_instance(
          g, algorithm, heuristic, heap_from_name(heap_arg), run_seed);
      std::cout << (outcome.pass ? "PASS" : "FAIL") << ": " << outcome.detail
                << "\n";
      return outcome.pass ? kExitOk : kExitValidationFailure;
    }

    if (*sweep) {
      std::ifstream manifest(manifest_path);
      if (!manifest)
        throw std::runtime_error("cannot read '" + manifest_path + "'");
      std::ofstream csv(csv_path, std::ios::binary);
      if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
      int rows = run_sweep(manifest, csv, /*write_header=*/true, &std::cerr);
      std::cout << "wrote " << rows << " rows to " << csv_path << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
