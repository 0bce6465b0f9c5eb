// treepath/io.hpp - Text formats: the native instance format used by the
// generators and CLI, and the DIMACS shortest-path format.
#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "treepath/graph.hpp"

namespace treepath {

inline std::string format_weight(double w) {
  if (w == kInf) return "inf";
  long long ll = std::llround(w);
  if (static_cast<double>(ll) == w) return std::to_string(ll);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

inline double parse_weight(const std::string& token) {
  if (token == "inf") return kInf;
  std::size_t used = 0;
  double w;
  try {
    w = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad weight token '" + token + "'");
  }
  if (used != token.size() || std::isnan(w) || w == -kInf || w == kInf)
    throw std::invalid_argument("bad weight token '" + token + "'");
  return w;
}

// Native format:
//   # comment lines
//   n m
//   u v w_uv w_vu        (m lines, one per unordered pair; weights may be inf)
inline void write_native(const Graph& g, std::ostream& out,
                         const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges())
    out << u << " " << v << " " << format_weight(g.weight(u, v)) << " "
        << format_weight(g.weight(v, u)) << "\n";
}

inline std::string write_native(const Graph& g,
                                const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_native(g, out, comments);
  return out.str();
}

inline Graph read_native(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  int edges_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("native: malformed header");
      g = Graph(n);
      continue;
    }
    int u, v;
    std::string wa, wb;
    if (!(fields >> u >> v >> wa >> wb))
      throw std::invalid_argument("native: malformed edge line '" + line + "'");
    if (++edges_seen > m) throw std::invalid_argument("native: too many edges");
    if (!g.add_edge(u, v))
      throw std::invalid_argument("native: duplicate edge");
    g.set_weight(u, v, parse_weight(wa));
    g.set_weight(v, u, parse_weight(wb));
  }
  if (n < 0) throw std::invalid_argument("native: missing header");
  if (edges_seen != m)
    throw std::invalid_argument("native: edge count mismatch");
  return g;
}

inline Graph read_native(const std::string& text) {
  std::istringstream in(text);
  return read_native(in);
}

// DIMACS shortest-path format: `c` comments, one `p sp <n> <m>` header, then
// m lines `a <u> <v> <w>` with integer w, one directed arc each.
inline Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1, arcs_seen = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (n >= 0 || !(fields >> kind >> n >> m) || kind != "sp" || n < 0 ||
          m < 0)
        throw std::invalid_argument("dimacs: malformed problem line");
      continue;
    }
    if (tag == "a") {
      if (n < 0) throw std::invalid_argument("dimacs: arc before header");
      int u, v;
      long long w;
      if (!(fields >> u >> v >> w))
        throw std::invalid_argument("dimacs: malformed arc line '" + line +
                                    "'");
      ++arcs_seen;
      arcs.push_back({u, v, static_cast<double>(w)});
      continue;
    }
    throw std::invalid_argument("dimacs: unknown line tag '" + tag + "'");
  }
  if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
  if (arcs_seen != m) throw std::invalid_argument("dimacs: arc count mismatch");
  return from_edges(n, arcs);
}

inline Graph read_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

/// Emits one `a` line per finite directed arc. Weights must be integers.
inline void write_dimacs(const Graph& g, std::ostream& out) {
  std::vector<Arc> arcs = g.arcs();
  for (const Arc& a : arcs)
    if (static_cast<double>(std::llround(a.weight)) != a.weight)
      throw std::invalid_argument("dimacs: non-integer weight");
  out << "p sp " << g.vertex_count() << " " << arcs.size() << "\n";
  for (const Arc& a : arcs)
    out << "a " << a.from << " " << a.to << " " << std::llround(a.weight)
        << "\n";
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(g, out);
  return out.str();
}

}  // namespace treepath
