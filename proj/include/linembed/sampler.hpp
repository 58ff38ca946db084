#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linembed/boundary.hpp"
#include "linembed/graph.hpp"
#include "linembed/io.hpp"
#include "linembed/rational.hpp"
#include "linembed/step_graphon.hpp"

namespace linembed {

struct SampleRecord {
  Graph graph;
  std::vector<double> latents;  // latents[v], as drawn
  Ordering latent_order;        // vertices sorted by latent (stable)
  uint64_t seed = 0;
  std::string source;
};

// w-random graph: latents i.i.d. uniform on [0,1] (latent stream), then each
// pair {i,j} linked independently with probability w(x_i, x_j) (per-row edge
// substreams). Requires values in [0,1].
SampleRecord sample_w_random(const StepGraphon& w, int n, uint64_t seed);
// {0,1}-valued case: i ~ j iff l(x_i) <= x_j <= r(x_i) (closed intervals).
SampleRecord sample_w_random(const BoundarySpec& b, int n, uint64_t seed);

// Random geometric graph on the line: positions F^{-1}(u_j), adjacency iff
// |p_i - p_j| <= 1. Latents recorded are the u_j.
SampleRecord sample_geometric_cdf(const CdfSpec& cdf, int n, uint64_t seed);

// Boundary of the graphon underlying the cdf model:
// r(x) = F(min(F^{-1}(x) + 1, sup)).
BoundarySpec graphon_from_cdf(const CdfSpec& cdf);

enum class Motif { K2, P3, K3, C4, P4 };
Motif motif_from_name(const std::string& name);
int motif_size(Motif f);

// Homomorphism density t(F, G) = hom(F, G) / n^k, exact.
Rat hom_density_graph(Motif f, const Graph& g);
// t(F, w) for a step graphon (closed form via block matrix powers).
double hom_density_graphon(Motif f, const StepGraphon& w);

}  // namespace linembed
