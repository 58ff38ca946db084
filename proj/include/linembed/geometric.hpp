#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linembed/graph.hpp"

namespace linembed {

enum class Mode { exact, heuristic };

// Violation of the contiguity condition: ranks rv < rz < rw with
// v ~ w but z not adjacent to both.
struct GeometricWitness {
  int v = -1, z = -1, w = -1;  // vertex ids
};

struct GeometricCheck {
  bool ok = false;
  std::optional<GeometricWitness> witness;
};

// An ordering is geometric iff every vertex's closed neighborhood occupies a
// contiguous rank interval; equivalently, for all v < z < w in rank with
// v ~ w, z is adjacent to both. O(n^2).
GeometricCheck check_geometric_condition(const Graph& g, const Ordering& ord);

struct OrderingSearch {
  bool found = false;
  std::optional<Ordering> order;
  Mode mode = Mode::exact;
  // True when a failed exact search certifies that no geometric ordering
  // exists; heuristic failures are inconclusive.
  bool exhaustive = false;
};

// exact: complete backtracking over orderings (lexicographically least
// witness; cost guard n <= 20). heuristic: Fiedler + LBFS sweeps + 2-opt
// refinement portfolio; a returned ordering is always verified.
OrderingSearch find_geometric_ordering(const Graph& g, Mode mode,
                                       uint64_t seed = 0);

struct LineEmbedding {
  std::vector<double> coord;  // coord[v]
};

// Left-to-right interval construction for a geometric ordering: each vertex
// is placed inside the window forced by its earliest-ranked neighbor.
// Distinct components are separated by gaps of 2. Throws PreconditionError
// (with the violating triple) if the ordering is not geometric.
LineEmbedding construct_line_embedding(const Graph& g, const Ordering& ord);

// True iff adjacency matches |coord(u) - coord(v)| < 1 for all pairs.
bool embedding_realizes(const Graph& g, const LineEmbedding& emb);

}  // namespace linembed
