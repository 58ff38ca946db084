#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linembed/geometric.hpp"

namespace linembed {

// Convergence experiment: sample G(n, w) per (size, seed), compute
// gamma-star under the requested orderings, emit one CSV row each.
struct ExperimentConfig {
  std::string source;            // step-graphon or boundary JSON path
  std::vector<int> sizes;        // strictly increasing
  int seeds_per_size = 0;
  std::vector<std::string> orderings;  // of: latent, fiedler, lbfs, random
  std::string output;            // CSV path ("" = stdout only)
  Mode mode = Mode::heuristic;
  int restarts = 16;
  int blocks = 8;                // discretization when source is a boundary
  uint64_t base_seed = 0;
  bool timing = false;           // emit wall-clock ms (off: deterministic 0)

  static ExperimentConfig from_json(const std::string& text);
  void validate() const;
};

// Rows sorted by (n, seed, ordering); header
// "n,seed,ordering,gamma_star,mode,elapsed_ms,status". Parallel over cells
// when LINEMBED_THREADS > 1; per-cell failures become status=error rows.
std::string run_converge(const ExperimentConfig& cfg);

int thread_budget();  // LINEMBED_THREADS, default 1

}  // namespace linembed
