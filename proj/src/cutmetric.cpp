#include "linembed/cutmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "linembed/errors.hpp"
#include "linembed/gamma.hpp"
#include "linembed/rng.hpp"

namespace linembed {

namespace {

// Given column sums over S, the best T takes every strictly positive column
// (or every strictly negative one); returns the larger magnitude with the
// sign convention value >= 0 and the chosen orientation.
struct BestT {
  double value = 0;
  bool positive = true;
};

BestT best_t_for(const std::vector<double>& colsum) {
  double plus = 0, minus = 0;
  for (double c : colsum) {
    if (c > 0) plus += c;
    if (c < 0) minus -= c;
  }
  BestT out;
  // ties prefer the positive orientation
  out.positive = plus >= minus;
  out.value = std::max(plus, minus);
  return out;
}

SubsetMask t_mask_for(const std::vector<double>& colsum, bool positive) {
  int n = static_cast<int>(colsum.size());
  SubsetMask t(n);
  for (int j = 0; j < n; ++j)
    if ((positive && colsum[j] > 0) || (!positive && colsum[j] < 0))
      t.set(j, true);
  return t;
}

double eval_st(const StepGraphon& w, const SubsetMask& s, const SubsetMask& t) {
  int n = w.n();
  double sum = 0;
  for (int i = 0; i < n; ++i)
    if (s.contains(i))
      for (int j = 0; j < n; ++j)
        if (t.contains(j)) sum += w.value(i, j);
  return std::fabs(sum) / (static_cast<double>(n) * n);
}

}  // namespace

CutNormReport cut_norm(const StepGraphon& w, CutMode mode, uint64_t seed,
                       int restarts) {
  int n = w.n();
  CutNormReport rep;
  rep.mode = mode;
  rep.S = SubsetMask::none(n);
  rep.T = SubsetMask::none(n);
  if (mode == CutMode::exact) {
    if (n > 22)
      throw CostGuardError("cut_norm exact: n > 22 blocks (2^n subsets)");
    std::vector<double> colsum(n, 0);
    double best = 0;
    SubsetMask bestS = SubsetMask::none(n), bestT = SubsetMask::none(n);
    SubsetMask cur(n);
    unsigned long long g_prev = 0;
    unsigned long long steps = 1ULL << n;
    for (unsigned long long k = 1; k < steps; ++k) {
      unsigned long long gray = k ^ (k >> 1);
      int bit = __builtin_ctzll(gray ^ g_prev);
      g_prev = gray;
      double sgn = cur.contains(bit) ? -1.0 : 1.0;
      cur.flip(bit);
      for (int j = 0; j < n; ++j) colsum[j] += sgn * w.value(bit, j);
      BestT bt = best_t_for(colsum);
      if (bt.value > best + 1e-15) {
        best = bt.value;
        bestS = cur;
        bestT = t_mask_for(colsum, bt.positive);
      } else if (std::fabs(bt.value - best) <= 1e-15 && best > 0) {
        SubsetMask candT = t_mask_for(colsum, bt.positive);
        if (SubsetMask::lex_less(cur, bestS) ||
            (cur == bestS && SubsetMask::lex_less(candT, bestT))) {
          bestS = cur;
          bestT = candT;
        }
      }
    }
    rep.S = bestS;
    rep.T = bestT;
    rep.value = eval_st(w, bestS, bestT);  // re-evaluated without drift
    rep.exact = true;
    return rep;
  }
  // alternating maximization from seeded starts
  double best = 0;
  SubsetMask bestS = SubsetMask::none(n), bestT = SubsetMask::none(n);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    SubsetMask s(n);
    if (r == 0) {
      s = SubsetMask::all(n);
    } else {
      Rng rng(mix_seed(seed, kStreamCut, r));
      for (int i = 0; i < n; ++i)
        if (rng.bernoulli(0.5)) s.set(i, true);
    }
    SubsetMask t(n);
    for (int iter = 0; iter < 64; ++iter) {
      std::vector<double> colsum(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          if (s.contains(i)) colsum[j] += w.value(i, j);
      BestT bt = best_t_for(colsum);
      SubsetMask t2 = t_mask_for(colsum, bt.positive);
      std::vector<double> rowsum(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (t2.contains(j)) rowsum[i] += w.value(i, j);
      // keep the same orientation when optimizing S
      SubsetMask s2(n);
      for (int i = 0; i < n; ++i)
        if ((bt.positive && rowsum[i] > 0) || (!bt.positive && rowsum[i] < 0))
          s2.set(i, true);
      if (s2 == s && t2 == t) break;
      s = s2;
      t = t2;
    }
    double v = eval_st(w, s, t);
    if (v > best + 1e-15) {
      best = v;
      bestS = s;
      bestT = t;
    }
  }
  rep.S = bestS;
  rep.T = bestT;
  rep.value = best;
  rep.exact = false;
  return rep;
}

namespace {

StepGraphon block_difference(const StepGraphon& a, const StepGraphon& b) {
  int n = a.n();
  std::vector<double> vals((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      vals[(size_t)i * n + j] = a.value(i, j) - b.value(i, j);
  return StepGraphon(n, std::move(vals));
}

}  // namespace

CutDistanceReport cut_distance_blocks(const StepGraphon& w1,
                                      const StepGraphon& w2, CutMode mode,
                                      uint64_t seed, int restarts) {
  long long L = std::lcm((long long)w1.n(), (long long)w2.n());
  if (L > 1200)
    throw CostGuardError("cut_distance_blocks: refined block count > 1200");
  int n = static_cast<int>(L);
  StepGraphon a = w1.refined(n / w1.n());
  StepGraphon b = w2.refined(n / w2.n());
  CutDistanceReport rep;
  rep.mode = mode;
  rep.refined_blocks = n;
  auto norm_for = [&](const std::vector<int>& perm) {
    return cut_norm(block_difference(a, b.permuted(perm)), mode, seed, 8)
        .value;
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (mode == CutMode::exact && n <= 8) {
    std::vector<int> perm = id;
    double best = std::numeric_limits<double>::infinity();
    do {
      double v = norm_for(perm);
      if (v < best - 1e-15) {
        best = v;
        rep.perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.value = best;
    rep.exact = true;
    return rep;
  }
  // adjacent-swap descent from identity plus seeded shuffles
  std::vector<std::vector<int>> starts = {id};
  for (int r = 1; r < std::max(1, restarts) && n >= 2; ++r) {
    std::vector<int> p = id;
    Rng rng(mix_seed(seed, kStreamCut, 500 + r));
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[rng.below(static_cast<uint64_t>(i) + 1)]);
    starts.push_back(std::move(p));
  }
  double best = std::numeric_limits<double>::infinity();
  for (auto& p0 : starts) {
    std::vector<int> p = p0;
    double cur = norm_for(p);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int k = 0; k + 1 < n; ++k) {
        std::swap(p[k], p[k + 1]);
        double v = norm_for(p);
        if (v < cur - 1e-15) {
          cur = v;
          improved = true;
        } else {
          std::swap(p[k], p[k + 1]);
        }
      }
    }
    if (cur < best - 1e-15) {
      best = cur;
      rep.perm = p;
    }
  }
  rep.value = best;
  rep.exact = false;
  return rep;
}

ChiProductReport chi_product(const StepGraphon& w, CutMode mode,
                             uint64_t seed) {
  int n = w.n();
  ChiProductReport rep;
  rep.n = n;
  rep.upper_values.assign((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      rep.upper_values[(size_t)i * n + j] = w.value(i, j);

  // Block-aligned test sets: for S fixed, the bilinear form is linear in T
  // with coefficients c_j(S) = sum_{i in S, i < j} v_ij / n^2
  //                          + [j in S] v_jj / (2 n^2). Any (S, T) certifies
  // a lower bound, so the heuristic fallback for large n stays sound.
  double nn = static_cast<double>(n) * n;
  std::vector<double> B((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    B[(size_t)i * n + i] = w.value(i, i) / (2 * nn);
    for (int j = i + 1; j < n; ++j) B[(size_t)i * n + j] = w.value(i, j) / nn;
  }
  double best = 0;
  SubsetMask bestS = SubsetMask::none(n), bestT = SubsetMask::none(n);
  if (n <= 22) {
    std::vector<double> c(n, 0);
    SubsetMask cur(n);
    unsigned long long g_prev = 0;
    unsigned long long steps = 1ULL << n;
    for (unsigned long long k = 1; k < steps; ++k) {
      unsigned long long gray = k ^ (k >> 1);
      int bit = __builtin_ctzll(gray ^ g_prev);
      g_prev = gray;
      double sgn = cur.contains(bit) ? -1.0 : 1.0;
      cur.flip(bit);
      for (int j = 0; j < n; ++j) c[j] += sgn * B[(size_t)bit * n + j];
      double plus = 0, minus = 0;
      for (int j = 0; j < n; ++j) {
        if (c[j] > 0) plus += c[j];
        if (c[j] < 0) minus -= c[j];
      }
      bool positive = plus >= minus;
      double v = std::max(plus, minus);
      if (v > best + 1e-15) {
        best = v;
        bestS = cur;
        SubsetMask t(n);
        for (int j = 0; j < n; ++j)
          if ((positive && c[j] > 0) || (!positive && c[j] < 0))
            t.set(j, true);
        bestT = t;
      }
    }
  } else {
    for (int r = 0; r < 16; ++r) {
      SubsetMask s(n);
      if (r == 0) {
        s = SubsetMask::all(n);
      } else {
        Rng rng(mix_seed(seed, kStreamCut, 900 + r));
        for (int i = 0; i < n; ++i)
          if (rng.bernoulli(0.5)) s.set(i, true);
      }
      for (int iter = 0; iter < 64; ++iter) {
        std::vector<double> c(n, 0);
        for (int i = 0; i < n; ++i)
          if (s.contains(i))
            for (int j = 0; j < n; ++j) c[j] += B[(size_t)i * n + j];
        double plus = 0, minus = 0;
        for (double v : c) {
          if (v > 0) plus += v;
          if (v < 0) minus -= v;
        }
        bool positive = plus >= minus;
        SubsetMask t(n);
        for (int j = 0; j < n; ++j)
          if ((positive && c[j] > 0) || (!positive && c[j] < 0))
            t.set(j, true);
        std::vector<double> rsum(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (t.contains(j)) rsum[i] += B[(size_t)i * n + j];
        SubsetMask s2(n);
        for (int i = 0; i < n; ++i)
          if ((positive && rsum[i] > 0) || (!positive && rsum[i] < 0))
            s2.set(i, true);
        double v = std::max(plus, minus);
        if (v > best + 1e-15) {
          best = v;
          bestS = s;
          bestT = t;
        }
        if (s2 == s) break;
        s = s2;
      }
    }
  }
  rep.lower = best;
  rep.S = bestS;
  rep.T = bestT;
  double cbound = w.bound();
  rep.upper = best + cbound / n;
  rep.w_cutnorm = cut_norm(w, mode, seed).value;
  rep.sqrt_bound = 2 * std::sqrt(std::max(0.0, rep.w_cutnorm));
  rep.preconditions_met = cbound <= 2 + 1e-9 && rep.w_cutnorm <= 0.5 + 1e-9;
  rep.bound_holds = rep.lower <= rep.sqrt_bound + 1e-12;
  return rep;
}

double chi_eval(const ChiProductReport& r, double x, double y) {
  if (x < 0 || x > 1 || y < 0 || y > 1)
    throw InputError("chi_eval: point outside the unit square");
  auto blk = [&](double z) {
    int b = static_cast<int>(z * r.n);
    return std::min(b, r.n - 1);
  };
  int bx = blk(x), by = blk(y);
  if (bx < by) return r.upper_values[(size_t)bx * r.n + by];
  if (bx > by) return 0.0;
  return x <= y ? r.upper_values[(size_t)bx * r.n + by] : 0.0;
}

ContinuityReport continuity_check(const StepGraphon& w1, const StepGraphon& w2,
                                  CutMode mode) {
  if (!w1.in_w0() || !w2.in_w0())
    throw InputError("continuity_check: values must lie in [0,1]");
  long long L = std::lcm((long long)w1.n(), (long long)w2.n());
  if (L > 1200)
    throw CostGuardError("continuity_check: refined block count > 1200");
  int n = static_cast<int>(L);
  StepGraphon a = w1.refined(n / w1.n());
  StepGraphon b = w2.refined(n / w2.n());
  double na = cut_norm(a, mode).value;
  double nb = cut_norm(b, mode).value;
  if (na > 0.25 + 1e-9 || nb > 0.25 + 1e-9)
    throw PreconditionError("continuity_check: cut norms must be <= 1/4",
                            "{\"norm1\":" + std::to_string(na) +
                                ",\"norm2\":" + std::to_string(nb) + "}");
  ContinuityReport rep;
  rep.cutnorm_diff = cut_norm(block_difference(a, b), mode).value;
  rep.rhs = 2 * rep.cutnorm_diff + 2 * std::sqrt(rep.cutnorm_diff);
  Mode gm = mode == CutMode::exact ? Mode::exact : Mode::heuristic;
  auto g1 = gamma(a, gm);
  auto g2 = gamma(b, gm);
  rep.est1 = g1.estimate;
  rep.est2 = g2.estimate;
  rep.upper1 = g1.upper;
  rep.upper2 = g2.upper;
  rep.lhs_lower = std::fabs(g1.estimate - g2.estimate);
  rep.lhs_upper = std::fabs(g1.upper - g2.upper);
  rep.holds = rep.lhs_lower <= rep.rhs + 1e-12 &&
              rep.lhs_upper <= rep.rhs + 1e-12;
  return rep;
}

}  // namespace linembed
