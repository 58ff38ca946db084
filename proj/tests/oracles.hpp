#pragma once

#include <cstdint>
#include <vector>

#include "linembed/boundary.hpp"
#include "linembed/graph.hpp"
#include "linembed/rational.hpp"
#include "linembed/sampler.hpp"
#include "linembed/step_graphon.hpp"
#include "linembed/subset.hpp"

// Brute-force reference implementations, straight from the definitions and
// deliberately sharing no code with the library paths they check.
namespace oracles {

using linembed::BoundarySpec;
using linembed::Graph;
using linembed::Motif;
using linembed::Ordering;
using linembed::Rat;
using linembed::StepGraphon;
using linembed::SubsetMask;

// Sum over rank pairs i < j of the two clamped neighborhood differences,
// counting vertices by direct scans. Exact, O(n^3) per pair.
Rat gamma_star_fixed(const Graph& g, const Ordering& ord, const SubsetMask& a);

// Max over all 2^n subsets (n <= 20 in principle, use small n).
Rat gamma_star_order(const Graph& g, const Ordering& ord);

// Min over all n! orderings (use n <= 6).
Rat gamma_star(const Graph& g);

// Block-aligned g_w(A) for a graphon with rational values q[i][j]/scale:
// positive parts of the pure cross-block sums, no diagonal partials.
Rat g_w(int n, long long scale, const std::vector<long long>& q,
        const SubsetMask& a);

// Block-aligned Gamma(w, A): adds the within-block integral of the positive
// part of an affine function, evaluated in exact rational arithmetic.
Rat gamma_block(int n, long long scale, const std::vector<long long>& q,
                const SubsetMask& a);

Rat g_w_max(int n, long long scale, const std::vector<long long>& q);
Rat gamma_block_max(int n, long long scale, const std::vector<long long>& q);

// Min over block permutations of gamma_block_max (use n <= 5).
Rat gamma_tilde(int n, long long scale, const std::vector<long long>& q);

// Cut norm by enumerating all 4^n (S, T) pairs (use n <= 8).
double cut_norm(const StepGraphon& w);

// Same enumeration for a not-necessarily-symmetric n x n block kernel.
double cut_norm_matrix(int n, const std::vector<double>& v);

// Homomorphism density by enumerating all n^k vertex maps.
Rat hom_density(Motif f, const Graph& g);

// Midpoint-grid average of the boundary indicator over block (i, j) of an
// n-block discretization, sub x sub points per axis. O(1/sub) accurate.
double boundary_block_avg(const BoundarySpec& b, int n, int i, int j, int sub);

// Numeric integral of t -> max(s + t*d, 0) over [0,1] (Simpson on the
// pieces split at the sign change).
double pospart_integral(double s, double d);

// Deterministic G(n, p) corpus generator for property tests.
Graph random_graph(int n, double p, uint64_t seed);

// Random symmetric step graphon with values drawn from the given grid.
StepGraphon random_step_graphon(int n, const std::vector<double>& grid,
                                uint64_t seed);

}  // namespace oracles
