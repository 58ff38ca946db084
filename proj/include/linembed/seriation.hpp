#pragma once

#include <cstdint>

#include "linembed/graph.hpp"

namespace linembed {

// Candidate vertex orderings used as search starts.

// Sort by the Fiedler vector (second-smallest Laplacian eigenvector),
// ties by vertex id; sign fixed so the first nonzero component is positive.
Ordering fiedler_order(const Graph& g);

// Lexicographic BFS. tie_break gives priorities inside a partition class
// (higher value picked first); pass the previous sweep's positions for
// LBFS+ behavior. Unreached components are entered at the smallest
// remaining priority vertex.
Ordering lbfs_order(const Graph& g, const std::vector<int>& tie_break);
// k successive LBFS+ sweeps starting from a plain LBFS.
Ordering lbfs_sweeps(const Graph& g, int sweeps = 3);

// Sort by (degree, id).
Ordering degree_order(const Graph& g);

Ordering random_order(const Graph& g, uint64_t seed);

}  // namespace linembed
