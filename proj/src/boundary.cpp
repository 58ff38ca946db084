#include "linembed/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linembed/errors.hpp"

namespace linembed {

namespace {
constexpr double kTol = 1e-9;
}

BoundarySpec::BoundarySpec(std::vector<std::pair<double, double>> breakpoints)
    : bp_(std::move(breakpoints)) {
  if (bp_.size() < 2) throw InputError("boundary: need at least 2 breakpoints");
  for (auto& [x, r] : bp_)
    if (!std::isfinite(x) || !std::isfinite(r))
      throw InputError("boundary: non-finite breakpoint");
  if (bp_.front().first != 0.0)
    throw InputError("boundary: first breakpoint must have x = 0");
  if (std::fabs(bp_.back().first - 1.0) > kTol)
    throw InputError("boundary: last breakpoint must have x = 1");
  bp_.back().first = 1.0;
  for (size_t k = 0; k + 1 < bp_.size(); ++k)
    if (bp_[k + 1].first <= bp_[k].first)
      throw InputError("boundary: breakpoint xs must strictly increase");
  for (size_t k = 0; k + 1 < bp_.size(); ++k)
    if (bp_[k + 1].second < bp_[k].second - kTol)
      throw InputError("boundary: r must be non-decreasing");
  for (auto& [x, r] : bp_) {
    if (r < x - kTol) throw InputError("boundary: r(x) >= x violated");
    if (r < x) r = x;  // snap float slop
    if (r > 1 + kTol) throw InputError("boundary: r(x) <= 1 violated");
    if (r > 1) r = 1;
  }
  if (std::fabs(bp_.back().second - 1.0) > kTol)
    throw InputError("boundary: r(1) = 1 required");
  bp_.back().second = 1.0;
}

int BoundarySpec::segment_of(double x) const {
  // last k with bp_[k].x <= x, clamped to a valid segment start
  int lo = 0, hi = static_cast<int>(bp_.size()) - 1;
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (bp_[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double BoundarySpec::r(double x) const {
  if (x < 0 || x > 1) throw InputError("boundary: r argument outside [0,1]");
  int k = segment_of(x);
  auto [x0, r0] = bp_[k];
  auto [x1, r1] = bp_[k + 1];
  if (x <= x0) return r0;
  if (x >= x1) return r1;
  return r0 + (r1 - r0) * ((x - x0) / (x1 - x0));
}

double BoundarySpec::l(double y) const {
  if (y < 0 || y > 1) throw InputError("boundary: l argument outside [0,1]");
  if (y <= bp_.front().second) return 0.0;
  // first segment whose end value reaches y
  for (size_t k = 0; k + 1 < bp_.size(); ++k) {
    auto [x0, r0] = bp_[k];
    auto [x1, r1] = bp_[k + 1];
    if (r1 >= y) {
      if (r0 >= y) return x0;  // flat run below already reached y
      return x0 + (x1 - x0) * ((y - r0) / (r1 - r0));
    }
  }
  return 1.0;
}

bool BoundarySpec::contains(double x, double y) const {
  return l(x) <= y && y <= r(x);
}

StepGraphon BoundarySpec::to_step_graphon(int n) const {
  if (n <= 0) throw InputError("boundary: block count must be positive");
  // Candidate split points where r or l (as functions of x) change branch:
  // breakpoint xs, r-values at breakpoints (kinks of l), flat heights
  // (jumps of l).
  std::vector<double> splits;
  for (auto& [x, rv] : bp_) {
    splits.push_back(x);
    splits.push_back(rv);
  }
  for (size_t k = 0; k + 1 < bp_.size(); ++k)
    if (bp_[k].second == bp_[k + 1].second) splits.push_back(bp_[k].second);

  std::vector<double> vals((size_t)n * n, 0.0);
  double h = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    double xa = i * h, xb = (i + 1) * h;
    for (int j = 0; j < n; ++j) {
      double ylo = j * h, yhi = (j + 1) * h;
      // splits for this block: global candidates plus the crossings of r
      // with ylo/yhi and of l with ylo/yhi (the latter at x = r(y)).
      std::vector<double> cut = {xa, xb};
      for (double s : splits)
        if (s > xa && s < xb) cut.push_back(s);
      for (double target : {ylo, yhi}) {
        for (size_t k = 0; k + 1 < bp_.size(); ++k) {
          auto [x0, r0] = bp_[k];
          auto [x1, r1] = bp_[k + 1];
          if (r1 == r0) continue;
          if ((r0 - target) * (r1 - target) < 0) {
            double xc = x0 + (x1 - x0) * ((target - r0) / (r1 - r0));
            if (xc > xa && xc < xb) cut.push_back(xc);
          }
        }
        double xl = r(std::min(1.0, std::max(0.0, target)));
        if (xl > xa && xl < xb) cut.push_back(xl);
      }
      std::sort(cut.begin(), cut.end());
      cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

      double area = 0;
      for (size_t p = 0; p + 1 < cut.size(); ++p) {
        double a = cut[p], b = cut[p + 1];
        if (b - a < 1e-15) continue;
        // On (a,b) both top(x) = min(r(x), yhi) and bot(x) = max(l(x), ylo)
        // are linear; fit from two interior evaluations.
        double p1 = a + (b - a) * 0.25, p2 = a + (b - a) * 0.75;
        auto fit = [&](double f1, double f2) {
          double slope = (f2 - f1) / (p2 - p1);
          return std::pair<double, double>(f1 - slope * p1, slope);
        };
        auto [tc, ts] = fit(std::min(r(p1), yhi), std::min(r(p2), yhi));
        auto [bc, bs] = fit(std::max(l(p1), ylo), std::max(l(p2), ylo));
        double c0 = tc - bc, c1 = ts - bs;  // len(x) = c0 + c1 x
        double la = c0 + c1 * a, lb = c0 + c1 * b;
        if (la <= 0 && lb <= 0) continue;
        if (la >= 0 && lb >= 0) {
          area += 0.5 * (la + lb) * (b - a);
        } else {
          double root = -c0 / c1;
          if (la > 0)
            area += 0.5 * la * (root - a);
          else
            area += 0.5 * lb * (b - root);
        }
      }
      vals[(size_t)i * n + j] = area * n * n;
    }
  }
  // Symmetrize away float residue (the region is symmetric by construction).
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double m = 0.5 * (vals[(size_t)i * n + j] + vals[(size_t)j * n + i]);
      vals[(size_t)i * n + j] = vals[(size_t)j * n + i] = m;
    }
  return StepGraphon(n, std::move(vals));
}

BoundarySpec BoundarySpec::reflected() const {
  for (size_t k = 0; k + 1 < bp_.size(); ++k)
    if (bp_[k].second == bp_[k + 1].second && bp_[k].second < 1.0)
      throw PreconditionError(
          "boundary: interior flat segment, generalized inverse jumps");
  // Breakpoints of l: 0, r(0) (l = 0 up to there), r-values of breakpoints.
  std::vector<double> ys = {0.0, bp_.front().second};
  for (auto& [x, rv] : bp_) ys.push_back(rv);
  ys.push_back(1.0);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<std::pair<double, double>> ref;
  for (auto it = ys.rbegin(); it != ys.rend(); ++it)
    ref.emplace_back(1.0 - *it, 1.0 - l(*it));
  return BoundarySpec(std::move(ref));
}

}  // namespace linembed
