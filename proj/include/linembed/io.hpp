#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linembed/boundary.hpp"
#include "linembed/graph.hpp"
#include "linembed/step_graphon.hpp"

namespace linembed {

// Strictly increasing piecewise-linear cdf given as (t, F(t)) breakpoints,
// F(first) = 0, F(last) = 1. Used by the geometric cdf sampler.
struct CdfSpec {
  std::vector<std::pair<double, double>> bp;

  explicit CdfSpec(std::vector<std::pair<double, double>> breakpoints);
  CdfSpec() = default;
  double support_lo() const { return bp.front().first; }
  double support_hi() const { return bp.back().first; }
  double eval(double t) const;
  double inverse(double u) const;
};

// Graph text format: '#' comment lines, "n <count>" header, then "u v" edge
// lines. JSON alternative: {"n": int, "edges": [[u,v], ...]}.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// {"n": int, "values": [[row], ...]}; symmetry enforced within 1e-9.
StepGraphon parse_step_graphon_json(const std::string& text);
std::string step_graphon_to_json(const StepGraphon& w);

// {"breakpoints": [[x, r], ...]}
BoundarySpec parse_boundary_json(const std::string& text);
std::string boundary_to_json(const BoundarySpec& b);

// {"breakpoints": [[t, F], ...]}
CdfSpec parse_cdf_json(const std::string& text);

// {"coords": {"0": x0, "1": x1, ...}}
std::vector<double> parse_embedding_json(const std::string& text);
std::string embedding_to_json(const std::vector<double>& coords);

// File helpers. load_graph auto-detects JSON ('{' first non-space byte)
// versus the text format.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
Graph load_graph(const std::string& path);
StepGraphon load_step_graphon(const std::string& path);
BoundarySpec load_boundary(const std::string& path);
CdfSpec load_cdf(const std::string& path);

// Shortest round-trip decimal form of a double (deterministic output).
std::string format_double(double v);

}  // namespace linembed
