#include "linembed/step_graphon.hpp"

#include <cmath>
#include <string>

#include "linembed/errors.hpp"

namespace linembed {

namespace {
constexpr double kSymTol = 1e-9;
}

StepGraphon::StepGraphon(int n, std::vector<double> values)
    : n_(n), v_(std::move(values)) {
  if (n <= 0) throw InputError("step graphon: block count must be positive");
  if (v_.size() != (size_t)n * n)
    throw InputError("step graphon: expected " + std::to_string(n) + "x" +
                     std::to_string(n) + " values");
  for (double x : v_)
    if (!std::isfinite(x)) throw InputError("step graphon: non-finite value");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(value(i, j) - value(j, i)) > kSymTol)
        throw InputError("step graphon: symmetry violation at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
}

int StepGraphon::block_of(double x) const {
  if (x < 0 || x > 1) throw InputError("step graphon: point outside [0,1]");
  int b = static_cast<int>(x * n_);
  return b >= n_ ? n_ - 1 : b;
}

double StepGraphon::bound() const {
  double c = 0;
  for (double x : v_) c = std::max(c, std::fabs(x));
  return c;
}

bool StepGraphon::in_w0() const {
  for (double x : v_)
    if (x < -kSymTol || x > 1 + kSymTol) return false;
  return true;
}

StepGraphon StepGraphon::refined(int factor) const {
  if (factor < 1) throw InputError("step graphon: refine factor must be >= 1");
  int m = n_ * factor;
  std::vector<double> v((size_t)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      v[(size_t)i * m + j] = value(i / factor, j / factor);
  return StepGraphon(m, std::move(v));
}

StepGraphon StepGraphon::permuted(const std::vector<int>& perm) const {
  if ((int)perm.size() != n_)
    throw InputError("step graphon: permutation size mismatch");
  std::vector<double> v((size_t)n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      v[(size_t)i * n_ + j] = value(perm[i], perm[j]);
  return StepGraphon(n_, std::move(v));
}

StepGraphon StepGraphon::from_graph(const Graph& g, const Ordering& ord) {
  int n = g.n();
  if (ord.n() != n) throw InputError("step graphon: ordering size mismatch");
  std::vector<double> v((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    v[(size_t)i * n + i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double x = g.adjacent(ord.perm[i], ord.perm[j]) ? 1.0 : 0.0;
      v[(size_t)i * n + j] = v[(size_t)j * n + i] = x;
    }
  }
  return StepGraphon(n, std::move(v));
}

QuantizedGraphon QuantizedGraphon::from_step(const StepGraphon& w,
                                             long long scale) {
  if (scale < 1) throw InputError("quantize: scale must be >= 1");
  QuantizedGraphon q;
  q.n = w.n();
  q.scale = scale;
  q.q.resize((size_t)q.n * q.n);
  for (size_t k = 0; k < q.q.size(); ++k) {
    double s = w.values()[k] * static_cast<double>(scale);
    long long r = std::llround(s);
    if (std::fabs(s - static_cast<double>(r)) > 1e-9 * scale)
      throw InputError("quantize: value not a multiple of 1/" +
                       std::to_string(scale));
    q.q[k] = r;
  }
  return q;
}

QuantizedGraphon QuantizedGraphon::from_graph(const Graph& g,
                                              const Ordering& ord) {
  QuantizedGraphon q;
  q.n = g.n();
  q.scale = 1;
  q.q.assign((size_t)q.n * q.n, 0);
  for (int i = 0; i < q.n; ++i) {
    q.q[(size_t)i * q.n + i] = 1;
    for (int j = i + 1; j < q.n; ++j) {
      long long x = g.adjacent(ord.perm[i], ord.perm[j]) ? 1 : 0;
      q.q[(size_t)i * q.n + j] = q.q[(size_t)j * q.n + i] = x;
    }
  }
  return q;
}

StepGraphon QuantizedGraphon::to_step() const {
  std::vector<double> v(q.size());
  for (size_t k = 0; k < q.size(); ++k)
    v[k] = static_cast<double>(q[k]) / static_cast<double>(scale);
  return StepGraphon(n, std::move(v));
}

std::optional<long long> detect_quantization(const StepGraphon& w,
                                             long long max_scale) {
  for (long long s = 1; s <= max_scale; ++s) {
    bool ok = true;
    for (double v : w.values()) {
      double t = v * static_cast<double>(s);
      if (std::fabs(t - std::llround(t)) > 1e-9 * s) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace linembed
