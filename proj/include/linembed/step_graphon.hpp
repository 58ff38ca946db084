#pragma once

#include <optional>
#include <vector>

#include "linembed/graph.hpp"

namespace linembed {

// Symmetric step function on [0,1]^2 with n equal blocks. Block membership
// uses half-open intervals [i/n, (i+1)/n), with x = 1 assigned to the last
// block. Values may be signed (bounded kernels), the [0,1] subclass is
// checked where an operation needs it.
class StepGraphon {
 public:
  StepGraphon() = default;
  StepGraphon(int n, std::vector<double> values);  // row-major n*n, symmetric

  int n() const { return n_; }
  double value(int i, int j) const { return v_[(size_t)i * n_ + j]; }
  const std::vector<double>& values() const { return v_; }

  int block_of(double x) const;
  double eval(double x, double y) const { return value(block_of(x), block_of(y)); }

  double bound() const;        // max |value|
  bool in_w0() const;          // all values within [0,1] (tolerance 1e-9)

  StepGraphon refined(int factor) const;        // same function, n*factor blocks
  StepGraphon permuted(const std::vector<int>& perm) const;  // block relabeling

  // Step graphon of a graph under an ordering: off-diagonal blocks carry the
  // adjacency of the ranked vertices, diagonal blocks carry 1.
  static StepGraphon from_graph(const Graph& g, const Ordering& ord);

 private:
  int n_ = 0;
  std::vector<double> v_;
};

// Integer view of a step graphon whose values are exact multiples of
// 1/scale; drives the exact rational gamma computations.
struct QuantizedGraphon {
  int n = 0;
  long long scale = 1;
  std::vector<long long> q;  // row-major, value = q/scale

  long long value(int i, int j) const { return q[(size_t)i * n + j]; }

  static QuantizedGraphon from_step(const StepGraphon& w, long long scale);
  static QuantizedGraphon from_graph(const Graph& g, const Ordering& ord);
  StepGraphon to_step() const;
};

// Smallest scale in 1..max_scale exactly representing every value, if any.
std::optional<long long> detect_quantization(const StepGraphon& w,
                                             long long max_scale = 64);

}  // namespace linembed
