#pragma once

#include <cstdint>
#include <vector>

#include "linembed/step_graphon.hpp"
#include "linembed/subset.hpp"

namespace linembed {

enum class CutMode { exact, heuristic };

struct CutNormReport {
  double value = 0;
  SubsetMask S, T;  // block-aligned witness sets
  CutMode mode = CutMode::exact;
  bool exact = false;
};

// Cut norm sup_{S,T} |int_{SxT} w|. For step functions the sup is attained
// block-aligned. exact: enumerate S (Gray code), pick T greedily by column
// sign; guard n <= 22. heuristic: seeded alternating maximization.
CutNormReport cut_norm(const StepGraphon& w, CutMode mode, uint64_t seed = 0,
                       int restarts = 16);

struct CutDistanceReport {
  double value = 0;
  std::vector<int> perm;  // block permutation applied to w2
  CutMode mode = CutMode::exact;
  bool exact = false;     // permutations enumerated exhaustively
  int refined_blocks = 0;
  // Minimum over block permutations only, hence an upper bound on the
  // measure-preserving cut distance.
  bool upper_bound_only = true;
};

// Refines both graphons to lcm(n1, n2) blocks, then minimizes the cut norm
// of the difference over block permutations (exact when refined size <= 8,
// adjacent-swap descent otherwise). Refined size guard: lcm <= 1200.
CutDistanceReport cut_distance_blocks(const StepGraphon& w1,
                                      const StepGraphon& w2, CutMode mode,
                                      uint64_t seed = 0, int restarts = 16);

struct ChiProductReport {
  int n = 0;
  // (w*chi)(x,y) = w(x,y) for x <= y, else 0: upper blocks keep their value,
  // lower blocks are 0, diagonal blocks keep w on the upper triangle only.
  std::vector<double> upper_values;  // row-major; entry (i,j) for i <= j
  double lower = 0;       // certified lower bound on ||w chi||_cut
  double upper = 0;       // lower-bound value + c/n (see below)
  double w_cutnorm = 0;   // exact/heuristic cut norm of w itself
  double sqrt_bound = 0;  // 2 sqrt(||w||_cut)
  bool preconditions_met = false;  // ||w||_inf <= 2 and ||w||_cut <= 1/2
  bool bound_holds = false;        // lower <= sqrt_bound
  SubsetMask S, T;
};

// Restricting test sets to block-aligned S,T (whole triangles on the
// diagonal) gives a certified lower bound on ||w chi||_cut; arbitrary test
// sets can add at most c/n through the split diagonal blocks, giving the
// reported upper bound.
ChiProductReport chi_product(const StepGraphon& w, CutMode mode,
                             uint64_t seed = 0);
double chi_eval(const ChiProductReport& r, double x, double y);

struct ContinuityReport {
  double rhs = 0;           // 2 d + 2 sqrt(d), d = cut norm of difference
  double cutnorm_diff = 0;
  double lhs_lower = 0;     // |estimate1 - estimate2|
  double lhs_upper = 0;     // |upper1 - upper2|
  bool holds = false;       // both aligned band endpoints satisfy the bound
  double est1 = 0, est2 = 0, upper1 = 0, upper2 = 0;
};

// Checks |Gamma(w1) - Gamma(w2)| <= 2 d + 2 sqrt(d) using the certified
// gamma bands. The band endpoints are compared aligned (lower with lower,
// upper with upper); both inequalities are implied by the subset-wise
// bound, so a failure is a real defect. Requires w1, w2 in W0 with cut
// norms <= 1/4 and equal block counts after refinement.
ContinuityReport continuity_check(const StepGraphon& w1, const StepGraphon& w2,
                                  CutMode mode);

}  // namespace linembed
