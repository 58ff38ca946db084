#pragma once

#include <utility>
#include <vector>

#include "linembed/step_graphon.hpp"

namespace linembed {

// Piecewise-linear upper boundary r of a {0,1}-valued diagonally increasing
// graphon: w(x,y) = 1 iff l(x) <= y <= r(x), where l is the generalized
// inverse of r. Invariants: breakpoint xs strictly increase from 0 to 1,
// r is non-decreasing, r(x) >= x, r(1) = 1.
class BoundarySpec {
 public:
  BoundarySpec() = default;
  explicit BoundarySpec(std::vector<std::pair<double, double>> breakpoints);

  const std::vector<std::pair<double, double>>& breakpoints() const { return bp_; }

  double r(double x) const;
  // l(y) = inf{x : r(x) >= y} for y in [r(0), 1], and 0 below r(0).
  double l(double y) const;

  bool contains(double x, double y) const;  // l(x) <= y <= r(x)

  // Block averages of the indicator; exact area integration per block.
  StepGraphon to_step_graphon(int n) const;

  // Boundary of the reflected graphon w^phi with phi(x) = 1 - x, i.e.
  // r'(x) = 1 - l(1 - x). Requires r to have no interior flat segment
  // (otherwise l jumps and the reflection is not piecewise linear).
  BoundarySpec reflected() const;

 private:
  int segment_of(double x) const;
  std::vector<std::pair<double, double>> bp_;
};

}  // namespace linembed
