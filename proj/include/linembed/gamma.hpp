#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linembed/boundary.hpp"
#include "linembed/geometric.hpp"
#include "linembed/graph.hpp"
#include "linembed/rational.hpp"
#include "linembed/step_graphon.hpp"
#include "linembed/subset.hpp"

namespace linembed {

// ---- graph side -----------------------------------------------------------

// Gamma*(G, ord, A), exact, normalized by n^3. O(n^2) via per-vertex prefix
// counts of neighbors inside A.
Rat gamma_star_fixed(const Graph& g, const Ordering& ord, const SubsetMask& a);

struct GammaStarReport {
  Rat value;
  Ordering order;
  SubsetMask subset;   // maximizing subset found for `order`
  Mode mode = Mode::exact;
  bool exhaustive = false;  // exact search completed
  int restarts_used = 0;
};

// max over vertex subsets A for a fixed ordering. exact enumerates 2^n
// (guard n <= 20); heuristic runs single-flip coordinate ascent from the
// all-vertices start plus seeded random starts.
GammaStarReport gamma_star_order(const Graph& g, const Ordering& ord, Mode mode,
                                 uint64_t seed = 0, int restarts = 16);

// min over orderings. exact enumerates n! with branch-and-bound (guard
// n <= 9) after first checking for a zero certificate (an ordering passing
// the contiguity condition). heuristic searches a seriation portfolio plus
// random restarts, refined by adjacent transpositions.
GammaStarReport gamma_star(const Graph& g, Mode mode, uint64_t seed = 0,
                           int restarts = 16,
                           const std::vector<Ordering>& extra_starts = {});

// ---- graphon side ---------------------------------------------------------

// g_w(A): block-aligned inner value of Gamma(w, A) ignoring the partial
// diagonal-block terms. Double path for arbitrary values.
double g_w(const StepGraphon& w, const SubsetMask& a);
// Exact path for integer-quantized graphons (graph-derived or value grids).
Rat g_w_exact(const QuantizedGraphon& w, const SubsetMask& a);

// Exact Gamma(w, A) for a block-aligned A: per block pair the inner integral
// is the positive part of an affine function, integrated in closed form.
double gamma_block(const StepGraphon& w, const SubsetMask& a);
Rat gamma_block_exact(const QuantizedGraphon& w, const SubsetMask& a);

struct GammaReport {
  double estimate = 0;  // max over block-aligned subsets of Gamma(w, A)
  double lower = 0;     // = estimate
  double upper = 0;     // = estimate + 4c/n, c = value bound
  std::optional<Rat> exact;  // exact estimate when quantized input
  SubsetMask subset;
  Mode mode = Mode::exact;
  bool exhaustive = false;
  double bound_c = 0;
};

// The true sup over measurable A lies in [estimate, estimate + 4c/n].
// exact enumerates 2^n subsets (guard n <= 20).
GammaReport gamma(const StepGraphon& w, Mode mode, uint64_t seed = 0,
                  int restarts = 16);
GammaReport gamma_exact_quantized(const QuantizedGraphon& w, Mode mode,
                                  uint64_t seed = 0, int restarts = 16);

struct GammaTildeReport {
  double estimate = 0;  // min over block permutations of gamma estimate
  std::vector<int> perm;
  std::optional<Rat> exact;
  Mode mode = Mode::exact;
  bool exhaustive = false;
  // Upper bound on the rearrangement-invariant parameter: only block
  // permutations of the given step structure are searched.
  bool upper_bound_only = true;
};

// exact enumerates all n! block permutations (guard n <= 8); heuristic runs
// adjacent-swap descent from seeded starts.
GammaTildeReport gamma_tilde(const StepGraphon& w, Mode mode, uint64_t seed = 0,
                             int restarts = 16);

// Riemann-sum reference on an m x m grid (tests only; O(m^2) after prefix
// sums). Converges at rate O(c/m) for step inputs.
double gamma_grid_oracle(const StepGraphon& w, const SubsetMask& a, int m);
// Boundary version: A is block-aligned over mask_blocks equal blocks.
double gamma_grid_oracle(const BoundarySpec& b, const SubsetMask& a,
                         int mask_blocks, int m);

// True iff every row is non-increasing moving away from the diagonal in
// both directions (block-level diagonal increase).
bool diagonally_increasing_check(const StepGraphon& w);

}  // namespace linembed
