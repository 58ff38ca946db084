#include "linembed/uniform_embed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linembed/errors.hpp"

namespace linembed {

namespace {

std::string list_json(const std::vector<double>& v) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

FixedPointSets fixed_point_sets(const BoundarySpec& b) {
  FixedPointSets out;
  const auto& bp = b.breakpoints();
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    auto [x0, r0] = bp[k];
    auto [x1, r1] = bp[k + 1];
    if (r0 == r1 && r0 < 1.0) {
      out.consistent = false;
      std::ostringstream msg;
      msg << "r is constant at height " << r0 << " on [" << x0 << ", " << x1
          << "] below 1";
      out.inconsistency = msg.str();
    }
    if (r0 == x0 && r1 == x1) {
      out.infinite_family = true;
      out.family_interval = {x0, x1};
    }
  }
  // R: fixed points of r in [0,1). Linear pieces with r >= x can only touch
  // the diagonal at breakpoints (an interior touch forces an identity
  // segment, flagged above).
  for (auto& [x, r] : bp)
    if (r == x && x < 1.0) out.R.push_back(x);
  // L: l(z) = z iff r stays strictly below z left of z. Interior: r(z) = z.
  // At z = 1: r must reach 1 only at 1.
  for (auto& [x, r] : bp)
    if (r == x && x > 0.0 && x < 1.0) out.L.push_back(x);
  bool reaches_one_early = false;
  for (auto& [x, r] : bp)
    if (x < 1.0 && r >= 1.0) reaches_one_early = true;
  if (!reaches_one_early) out.L.push_back(1.0);
  std::sort(out.L.begin(), out.L.end());
  out.L.erase(std::unique(out.L.begin(), out.L.end()), out.L.end());
  std::sort(out.R.begin(), out.R.end());
  out.R.erase(std::unique(out.R.begin(), out.R.end()), out.R.end());
  return out;
}

UniformDecision decide_uniform_embedding(const BoundarySpec& b) {
  FixedPointSets fps = fixed_point_sets(b);
  if (!fps.consistent)
    throw PreconditionError("boundary inconsistent: " + fps.inconsistency,
                            "{\"reason\":\"flat below 1\"}");
  if (fps.infinite_family) {
    std::ostringstream ws;
    ws << "{\"identity_interval\":[" << fps.family_interval->first << ","
       << fps.family_interval->second << "]}";
    throw PreconditionError("identity segment: uncountably many fixed points",
                            ws.str());
  }
  UniformDecision d;
  d.fps = fps;
  size_t count = fps.L.size() + fps.R.size();
  d.exists = count <= 2;
  std::vector<double> u = fps.L;
  u.insert(u.end(), fps.R.begin(), fps.R.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (!d.exists) {
    std::ostringstream why;
    why << "the fixed-point sets are too large (|L| + |R| = " << count
        << " > 2): L = " << list_json(fps.L) << ", R = " << list_json(fps.R);
    d.reason = why.str();
    return d;
  }
  bool only01 = true;
  for (double z : u)
    if (z != 0.0 && z != 1.0) only01 = false;
  d.increasing_available = only01;
  d.bounded = u.empty();
  if (u.empty() || (u.size() == 1 && u[0] == 1.0)) {
    d.case_tag = EmbedCase::unbounded_right;
    d.reason = u.empty() ? "no fixed points: bounded embedding"
                         : "single fixed point at 1: right-unbounded";
  } else if (u.size() == 1 && u[0] == 0.0) {
    d.case_tag = EmbedCase::unbounded_left;
    d.reason = "single fixed point at 0: left-unbounded";
  } else if (u.size() == 1) {
    d.case_tag = EmbedCase::interior_point;
    d.reason = "interior fixed point: two-branch embedding";
  } else {
    d.case_tag = EmbedCase::two_sided;
    d.reason = "fixed points at 0 and 1: unbounded both ways";
  }
  return d;
}

namespace {

// x_0, r(x_0), r(r(x_0)), ... strictly increasing; stops at an exact hit of
// stop_value, or truncates when steps shrink below eps / the cap is hit.
std::vector<double> up_track(const BoundarySpec& b, double x0,
                             double stop_value, bool& truncated) {
  std::vector<double> xs = {x0};
  truncated = false;
  while (static_cast<int>(xs.size()) < UniformEmbedding::kMaxAnchors) {
    double x = xs.back();
    if (x >= stop_value) break;
    double nx = b.r(x);
    if (nx > stop_value) nx = stop_value;
    if (nx - x < UniformEmbedding::kEpsAnchor) {
      truncated = true;
      break;
    }
    xs.push_back(nx);
  }
  if (static_cast<int>(xs.size()) >= UniformEmbedding::kMaxAnchors)
    truncated = true;
  return xs;
}

// y_0, l(y_0), l(l(y_0)), ... strictly decreasing toward limit.
std::vector<double> down_track(const BoundarySpec& b, double y0,
                               bool& truncated) {
  std::vector<double> ys = {y0};
  truncated = false;
  while (static_cast<int>(ys.size()) < UniformEmbedding::kMaxAnchors) {
    double y = ys.back();
    double ny = b.l(y);
    if (y - ny < UniformEmbedding::kEpsAnchor) {
      truncated = true;
      break;
    }
    ys.push_back(ny);
  }
  if (static_cast<int>(ys.size()) >= UniformEmbedding::kMaxAnchors)
    truncated = true;
  return ys;
}

}  // namespace

UniformEmbedding build_embedding(const BoundarySpec& b) {
  UniformDecision d = decide_uniform_embedding(b);
  if (!d.exists) {
    std::ostringstream ws;
    ws << "{\"L\":" << list_json(d.fps.L) << ",\"R\":" << list_json(d.fps.R)
       << "}";
    throw PreconditionError("no uniform linear embedding: " + d.reason,
                            ws.str());
  }
  UniformEmbedding e;
  e.tag = d.case_tag;
  e.increasing = d.increasing_available;
  e.bounded = d.bounded;
  switch (d.case_tag) {
    case EmbedCase::unbounded_right: {
      e.b_ = b;
      e.has_up_ = true;
      e.up_base_ = 0;
      e.up_ = up_track(b, 0.0, 1.0, e.up_truncated_);
      break;
    }
    case EmbedCase::unbounded_left: {
      e.b_ = b.reflected();
      e.reflect_ = true;
      e.has_up_ = true;
      e.up_base_ = 0;
      e.up_ = up_track(e.b_, 0.0, 1.0, e.up_truncated_);
      break;
    }
    case EmbedCase::interior_point: {
      e.b_ = b;
      double a = d.fps.L.front();
      e.a_ = a;
      e.has_up_ = true;
      e.up_base_ = 0;
      e.up_ = up_track(b, 0.0, a, e.up_truncated_);
      e.has_down_ = true;
      e.down_base_ = -2;
      e.down_ = down_track(b, 1.0, e.down_truncated_);
      break;
    }
    case EmbedCase::two_sided: {
      e.b_ = b;
      e.has_up_ = true;
      e.up_base_ = 0;
      e.up_ = up_track(b, 0.5, 1.0, e.up_truncated_);
      e.has_down_ = true;
      e.down_base_ = 1;
      e.down_ = down_track(b, b.r(0.5), e.down_truncated_);
      break;
    }
    case EmbedCase::none:
      break;
  }
  return e;
}

std::optional<double> UniformEmbedding::eval_raw(double x) const {
  auto eval_up = [&](double v) -> std::optional<double> {
    if (v < up_.front() || v > up_.back())
      return std::nullopt;  // truncated tail / fixed point
    if (up_.size() < 2) return up_base_;
    size_t lo = 0, hi = up_.size() - 1;
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (up_[mid] <= v)
        lo = mid;
      else
        hi = mid;
    }
    if (v >= up_[hi]) lo = hi;  // exact hit on the last anchor
    double z = v;
    for (size_t i = 0; i < lo; ++i) z = b_.l(z);
    return up_base_ + static_cast<double>(lo) +
           (z - up_[0]) / (up_[1] - up_[0]);
  };
  auto eval_down = [&](double v) -> std::optional<double> {
    if (v > down_.front() || v < down_.back()) return std::nullopt;
    if (down_.size() < 2) return down_base_;
    size_t lo = 0, hi = down_.size() - 1;  // down_ sorted descending
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (down_[mid] >= v)
        lo = mid;
      else
        hi = mid;
    }
    if (v <= down_[hi]) lo = hi;
    double z = v;
    for (size_t i = 0; i < lo; ++i) z = b_.r(z);
    return down_base_ - static_cast<double>(lo) +
           (z - down_[0]) / (down_[0] - down_[1]);
  };
  if (a_) return x < *a_ ? eval_up(x) : eval_down(x);
  if (has_up_ && x >= up_.front()) return eval_up(x);
  if (has_down_) return eval_down(x);
  return std::nullopt;
}

std::optional<double> UniformEmbedding::eval(double x) const {
  if (x < 0 || x > 1 || !std::isfinite(x))
    throw InputError("embedding eval: argument outside [0,1]");
  if (a_ && x == *a_) return -1.0;
  if (reflect_) {
    auto v = eval_raw(1.0 - x);
    if (!v) return std::nullopt;
    return -*v;
  }
  return eval_raw(x);
}

VerifyReport verify_embedding(
    const BoundarySpec& b,
    const std::function<std::optional<double>(double)>& pi, int grid_m,
    double delta) {
  if (grid_m < 2) throw InputError("verify_embedding: grid too small");
  VerifyReport rep;
  rep.grid = grid_m;
  std::vector<double> xs(grid_m);
  std::vector<std::optional<double>> vals(grid_m);
  for (int p = 0; p < grid_m; ++p) {
    xs[p] = (p + 0.5) / grid_m;
    vals[p] = pi(xs[p]);
  }
  for (int p = 0; p < grid_m; ++p) {
    for (int q = p + 1; q < grid_m; ++q) {
      // only the r-curve separates 1 from 0 above the diagonal
      double edge = b.r(xs[p]);
      if (std::fabs(xs[q] - edge) <= delta) {
        ++rep.skipped_pairs;
        continue;
      }
      if (!vals[p] || !vals[q]) {
        ++rep.skipped_pairs;
        continue;
      }
      double dist = std::fabs(*vals[p] - *vals[q]);
      if (std::fabs(dist - 1.0) <= delta) {
        ++rep.skipped_pairs;
        continue;
      }
      bool w_one = xs[q] <= edge;
      bool close = dist < 1.0;
      if (close != w_one) {
        ++rep.violations;
        if (rep.first_violation.empty()) {
          std::ostringstream msg;
          msg << "x=" << xs[p] << " y=" << xs[q] << " |pi(x)-pi(y)|=" << dist
              << " w=" << (w_one ? 1 : 0);
          rep.first_violation = msg.str();
        }
      } else {
        ++rep.checked_pairs;
      }
    }
  }
  rep.ok = rep.violations == 0 && rep.checked_pairs > 0;
  return rep;
}

RefutationWitness refute_embedding_witness(const BoundarySpec& b) {
  FixedPointSets fps = fixed_point_sets(b);
  if (!fps.consistent)
    throw PreconditionError("boundary inconsistent: " + fps.inconsistency);
  RefutationWitness out;
  if (fps.infinite_family) {
    out.uncountable = true;
    std::ostringstream arg;
    arg << "r(x) = x on [" << fps.family_interval->first << ", "
        << fps.family_interval->second
        << "]: every point of the interval is a fixed point, so the "
           "obstruction below applies to uncountably many points at once";
    out.argument = arg.str();
    return out;
  }
  std::vector<double> all = fps.L;
  all.insert(all.end(), fps.R.begin(), fps.R.end());
  all.push_back(0.0);
  all.push_back(1.0);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto below = [&](double z) {
    double prev = 0.0;
    for (double v : all)
      if (v < z) prev = v;
    return (prev + z) / 2;
  };
  auto above = [&](double z) {
    double next = 1.0;
    for (size_t i = all.size(); i-- > 0;)
      if (all[i] > z) next = all[i];
    return (z + next) / 2;
  };
  for (double z : fps.L) {
    RefutationWitness::BlockedPoint p;
    p.z = z;
    p.side = 'L';
    double x = below(z);
    for (int i = 0; i < 64 && z - x > 1e-12; ++i) {
      p.sequence.push_back(x);
      x = b.r(x);
    }
    out.points.push_back(std::move(p));
  }
  for (double z : fps.R) {
    RefutationWitness::BlockedPoint p;
    p.z = z;
    p.side = 'R';
    double y = above(z);
    for (int i = 0; i < 64 && y - z > 1e-12; ++i) {
      p.sequence.push_back(y);
      y = b.l(y);
    }
    out.points.push_back(std::move(p));
  }
  std::ostringstream arg;
  arg << "every fixed point pins an end of the line: consecutive points of "
         "its attached sequence sit exactly at the connection threshold, so "
         "any uniform embedding must move by at least one unit per step and "
         "diverge along the sequence; a line has two ends, but |L| + |R| = "
      << fps.L.size() + fps.R.size() << " here";
  out.argument = arg.str();
  return out;
}

}  // namespace linembed
