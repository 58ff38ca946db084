#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace linembed {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Keeps both an adjacency matrix (O(1) queries) and adjacency lists.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const { return adj_[(size_t)u * n_ + v] != 0; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  // Edges with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
};

// A linear ordering of the vertices: perm[k] = vertex at rank k,
// pos[v] = rank of vertex v.
struct Ordering {
  std::vector<int> perm;
  std::vector<int> pos;

  Ordering() = default;
  static Ordering identity(int n);
  static Ordering from_perm(std::vector<int> p);  // validates bijection
  int n() const { return static_cast<int>(perm.size()); }
  Ordering reversed() const;
};

}  // namespace linembed
