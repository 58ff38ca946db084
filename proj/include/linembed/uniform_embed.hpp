#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linembed/boundary.hpp"

namespace linembed {

// Fixed-point analysis of the boundary map. L = {z in (0,1] : l(z) = z},
// R = {z in [0,1) : r(z) = z}. `consistent` reflects the structural
// requirement that r is strictly increasing wherever it is below 1 (flat
// pieces are only allowed at height 1). A segment where r(x) = x
// identically yields uncountably many fixed points and is flagged.
struct FixedPointSets {
  std::vector<double> L, R;
  bool consistent = true;
  std::string inconsistency;  // reason when !consistent
  bool infinite_family = false;
  std::optional<std::pair<double, double>> family_interval;
};

FixedPointSets fixed_point_sets(const BoundarySpec& b);

enum class EmbedCase {
  none,        // gate failed
  unbounded_right,   // L u R subset of {1} (bounded when empty)
  unbounded_left,    // L u R = {0}
  interior_point,    // L = R = {a}, 0 < a < 1
  two_sided,         // L u R = {0, 1}
};

struct UniformDecision {
  bool exists = false;
  bool increasing_available = false;  // L u R subset of {0,1}
  bool bounded = false;               // L u R empty
  EmbedCase case_tag = EmbedCase::none;
  FixedPointSets fps;
  std::string reason;
};

// Gate: a uniform linear embedding exists iff |L| + |R| <= 2 (consistent,
// finitely many fixed points). Throws PreconditionError if the boundary is
// not consistent or has an infinite fixed-point family.
UniformDecision decide_uniform_embedding(const BoundarySpec& b);

// Piecewise evaluator for the constructed embedding. Anchor sequences
// follow the iterates of r (up) and l (down); each non-anchor point is
// mapped by walking back to the first anchor interval (affine there) and
// adding the step count. Anchor generation stops at interval length below
// eps_anchor or at max_anchors, in which case evaluation near the
// truncated end reports out-of-range.
class UniformEmbedding {
 public:
  EmbedCase tag = EmbedCase::none;
  bool increasing = false;
  bool bounded = false;

  // Evaluation; nullopt = beyond the materialized anchor range.
  std::optional<double> eval(double x) const;

  const std::vector<double>& up_anchors() const { return up_; }
  const std::vector<double>& down_anchors() const { return down_; }
  bool up_truncated() const { return up_truncated_; }
  bool down_truncated() const { return down_truncated_; }
  std::optional<double> interior_fixed_point() const { return a_; }

  static constexpr double kEpsAnchor = 1e-9;
  static constexpr int kMaxAnchors = 10000;

 private:
  friend UniformEmbedding build_embedding(const BoundarySpec& b);

  // Case geometry. up_: x_0 < x_1 < ... with pi(x_i) = up_base_ + i and
  // x_{i+1} = r(x_i). down_: y_0 > y_1 > ... with pi(y_i) = down_base_ - i
  // and y_{i+1} = l(y_i). reflect_: evaluate at 1 - x and negate (case 2).
  BoundarySpec b_;
  std::vector<double> up_, down_;
  double up_base_ = 0, down_base_ = 0;
  bool up_truncated_ = false, down_truncated_ = false;
  std::optional<double> a_;  // interior fixed point (case 3), mapped to -1
  bool reflect_ = false;
  bool has_up_ = false, has_down_ = false;

  std::optional<double> eval_raw(double x) const;
};

// Builds the embedding for a boundary passing the gate. Cases:
//   L u R subset of {1}: single up-track from 0 (bounded if no fixed point).
//   L u R = {0}: reflection of case 1, negated to stay increasing.
//   L = R = {a} interior: up-track from 0 toward a, a -> -1, down-track
//     from 1 toward a with pi(1) = -2.
//   L u R = {0,1}: up-track from 1/2 and down-track from r(1/2), one
//     increasing map on (0,1).
UniformEmbedding build_embedding(const BoundarySpec& b);

struct VerifyReport {
  int grid = 0;
  long long checked_pairs = 0;
  long long skipped_pairs = 0;  // margin exclusions and out-of-range points
  long long violations = 0;
  bool ok = false;
  std::string first_violation;
};

// Checks both implications of the embedding contract on an interior grid:
// |pi(x)-pi(y)| < 1-delta must imply w(x,y)=1, and > 1+delta imply 0.
// Pairs within delta of distance exactly 1 are excluded, as are grid points
// within delta of an anchor or of the boundary curve itself.
VerifyReport verify_embedding(const BoundarySpec& b,
                              const std::function<std::optional<double>(double)>& pi,
                              int grid_m, double delta = 1e-6);

// Refutation when the gate fails: for every isolated fixed point an anchor
// sequence converging to it (increasing via r for L, decreasing via l for
// R); three or more such half-line-blocking sequences cannot coexist. An
// identity segment is reported through the countability argument instead.
struct RefutationWitness {
  struct BlockedPoint {
    double z = 0;
    char side = 'L';
    std::vector<double> sequence;  // finite prefix approaching z
  };
  std::vector<BlockedPoint> points;
  bool uncountable = false;
  std::string argument;
};

RefutationWitness refute_embedding_witness(const BoundarySpec& b);

}  // namespace linembed
