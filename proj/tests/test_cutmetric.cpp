#include <cmath>

#include "doctest.h"
#include "linembed/cutmetric.hpp"
#include "linembed/errors.hpp"
#include "linembed/rng.hpp"
#include "oracles.hpp"

using namespace linembed;

namespace {

StepGraphon random_signed(int n, double lo, double hi, uint64_t seed) {
  Rng rng(mix_seed(seed, 0x5349474eULL));
  std::vector<double> v((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double x = lo + (hi - lo) * rng.uniform01();
      v[(size_t)i * n + j] = x;
      v[(size_t)j * n + i] = x;
    }
  return StepGraphon(n, std::move(v));
}

}  // namespace

TEST_CASE("cut norm spot values") {
  StepGraphon ones(2, {1, 1, 1, 1});
  CutNormReport r1 = cut_norm(ones, CutMode::exact);
  CHECK(r1.value == doctest::Approx(1.0));
  CHECK(r1.S.count() == 2);
  CHECK(r1.T.count() == 2);

  StepGraphon diag(2, {1, -1, -1, 1});
  CutNormReport r2 = cut_norm(diag, CutMode::exact);
  CHECK(r2.value == doctest::Approx(0.25));
  CHECK(r2.S.members() == std::vector<int>{0});
  CHECK(r2.T.members() == std::vector<int>{0});

  StepGraphon zero(3, std::vector<double>(9, 0.0));
  CHECK(cut_norm(zero, CutMode::exact).value == doctest::Approx(0.0));
}

TEST_CASE("cut norm matches the full (S,T) enumeration") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    int n = 2 + (int)(seed % 5);
    StepGraphon w = random_signed(n, -1.0, 1.0, seed);
    double oracle = oracles::cut_norm(w);
    CutNormReport ex = cut_norm(w, CutMode::exact);
    CHECK(ex.value == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(ex.exact);
    // the reported witness attains the value
    double sum = 0;
    for (int i : ex.S.members())
      for (int j : ex.T.members()) sum += w.value(i, j);
    CHECK(std::fabs(sum) / ((double)n * n) ==
          doctest::Approx(ex.value).epsilon(1e-12));
    // heuristic is a lower bound, usually tight on these sizes
    CutNormReport h = cut_norm(w, CutMode::heuristic, seed, 8);
    CHECK(h.value <= ex.value + 1e-12);
    CHECK_FALSE(h.exact);
  }
}

TEST_CASE("cut norm is symmetric under negation and permutation") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    StepGraphon w = random_signed(4, -1.0, 1.0, seed + 60);
    std::vector<double> neg = w.values();
    for (auto& x : neg) x = -x;
    CHECK(cut_norm(StepGraphon(4, neg), CutMode::exact).value ==
          doctest::Approx(cut_norm(w, CutMode::exact).value));
    CHECK(cut_norm(w.permuted({3, 1, 0, 2}), CutMode::exact).value ==
          doctest::Approx(cut_norm(w, CutMode::exact).value));
  }
  StepGraphon big(23, std::vector<double>((size_t)23 * 23, 0.0));
  CHECK_THROWS_AS(cut_norm(big, CutMode::exact), CostGuardError);
}

TEST_CASE("block cut distance") {
  StepGraphon w = random_signed(4, 0.0, 1.0, 77);
  CutDistanceReport same = cut_distance_blocks(w, w, CutMode::exact);
  CHECK(same.value == doctest::Approx(0.0));
  CHECK(same.exact);

  // distance to a block relabeling is zero (the search undoes it)
  CutDistanceReport relab =
      cut_distance_blocks(w, w.permuted({2, 0, 3, 1}), CutMode::exact);
  CHECK(relab.value == doctest::Approx(0.0).epsilon(1e-12));

  // different block counts refine to the lcm
  StepGraphon half(1, {0.5});
  StepGraphon w3 = random_signed(3, 0.0, 1.0, 5);
  CutDistanceReport r = cut_distance_blocks(half, w3, CutMode::exact);
  CHECK(r.refined_blocks == 3);
  CHECK(r.value >= 0.0);

  // the block-aligned minimum upper-bounds the true distance but can
  // never drop below |integral difference| (S = T = everything)
  double mean_diff = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mean_diff += w3.value(i, j) / 9.0 - 0.5 / 9.0 * 1.0;
  CHECK(r.value >= std::fabs(mean_diff) - 1e-12);

  StepGraphon a(49, std::vector<double>((size_t)49 * 49, 0.0));
  StepGraphon b(25, std::vector<double>((size_t)25 * 25, 0.0));
  CHECK_THROWS_AS(cut_distance_blocks(a, b, CutMode::heuristic),
                  CostGuardError);
}

TEST_CASE("chi product of the constant half graphon") {
  StepGraphon w(1, {0.5});
  ChiProductReport r = chi_product(w, CutMode::exact);
  CHECK(r.lower == doctest::Approx(0.25));
  CHECK(r.w_cutnorm == doctest::Approx(0.5));
  CHECK(r.sqrt_bound == doctest::Approx(2.0 * std::sqrt(0.5)));
  CHECK(r.preconditions_met);
  CHECK(r.bound_holds);
  CHECK(chi_eval(r, 0.2, 0.8) == doctest::Approx(0.5));
  CHECK(chi_eval(r, 0.8, 0.2) == doctest::Approx(0.0));
}

TEST_CASE("chi product bounds bracket a refined enumeration") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    int n = 2;
    StepGraphon w = random_signed(n, -0.4, 0.4, seed + 200);
    ChiProductReport r = chi_product(w, CutMode::exact);
    // refine w*chi to k sub-blocks per block and enumerate exactly
    int k = 5, m = n * k;
    std::vector<double> v((size_t)m * m, 0.0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double x = (a + 0.5) / m, y = (b + 0.5) / m;
        v[(size_t)a * m + b] = x <= y ? w.eval(x, y) : 0.0;
      }
    double refined = oracles::cut_norm_matrix(m, v);
    // block-aligned witness is a lower bound for the refined value too
    CHECK(r.lower <= refined + 1e-9);
    // and the diagonal-split slack covers the rest
    CHECK(refined <= r.upper + 1e-9);
    CHECK(r.upper == doctest::Approx(r.lower + w.bound() / n));
  }
}

TEST_CASE("chi product flags out-of-range preconditions") {
  StepGraphon loud(1, {3.0});
  ChiProductReport r = chi_product(loud, CutMode::exact);
  CHECK_FALSE(r.preconditions_met);
  // the certified bound machinery still works
  CHECK(r.lower <= r.upper + 1e-12);
}

TEST_CASE("continuity of gamma under cut-norm perturbation") {
  // identical inputs: zero difference on both sides
  StepGraphon w = oracles::random_step_graphon(4, {0.0, 0.1, 0.2}, 31);
  ContinuityReport same = continuity_check(w, w, CutMode::exact);
  CHECK(same.cutnorm_diff == doctest::Approx(0.0));
  CHECK(same.lhs_lower == doctest::Approx(0.0));
  CHECK(same.holds);

  // small perturbations satisfy 2d + 2 sqrt(d)
  for (uint64_t seed = 0; seed < 6; ++seed) {
    StepGraphon a = oracles::random_step_graphon(4, {0.0, 0.1, 0.2}, seed);
    std::vector<double> bumped = a.values();
    Rng rng(mix_seed(seed, 0x42554d50ULL));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        double d = 0.05 * rng.uniform01();
        bumped[(size_t)i * 4 + j] = std::min(1.0, a.value(i, j) + d);
        bumped[(size_t)j * 4 + i] = bumped[(size_t)i * 4 + j];
      }
    ContinuityReport r =
        continuity_check(a, StepGraphon(4, bumped), CutMode::exact);
    CHECK(r.holds);
    CHECK(r.rhs == doctest::Approx(2 * r.cutnorm_diff +
                                   2 * std::sqrt(r.cutnorm_diff)));
  }

  // inputs outside the small-norm regime are rejected with the norms
  StepGraphon ones(2, {1, 1, 1, 1});
  CHECK_THROWS_AS(continuity_check(ones, ones, CutMode::exact),
                  PreconditionError);
  StepGraphon neg(1, {-0.5});
  CHECK_THROWS_AS(continuity_check(neg, neg, CutMode::exact), InputError);
}
