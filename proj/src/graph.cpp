#include "linembed/graph.hpp"

#include <algorithm>
#include <string>

#include "linembed/errors.hpp"
#include "linembed/subset.hpp"

namespace linembed {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw InputError("graph: negative vertex count");
  adj_.assign((size_t)n * n, 0);
  nbrs_.assign(n, {});
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("graph: edge endpoint out of range: " +
                       std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("graph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[(size_t)u * n + v]) continue;  // ignore duplicates
    adj_[(size_t)u * n + v] = adj_[(size_t)v * n + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& l : nbrs_) std::sort(l.begin(), l.end());
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<uint8_t> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : nbrs_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt == n_;
}

Ordering Ordering::identity(int n) {
  Ordering o;
  o.perm.resize(n);
  o.pos.resize(n);
  for (int i = 0; i < n; ++i) o.perm[i] = o.pos[i] = i;
  return o;
}

Ordering Ordering::from_perm(std::vector<int> p) {
  int n = static_cast<int>(p.size());
  Ordering o;
  o.perm = std::move(p);
  o.pos.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    int v = o.perm[k];
    if (v < 0 || v >= n || o.pos[v] != -1)
      throw InputError("ordering: not a permutation of 0.." +
                       std::to_string(n - 1));
    o.pos[v] = k;
  }
  return o;
}

Ordering Ordering::reversed() const {
  std::vector<int> p(perm.rbegin(), perm.rend());
  return Ordering::from_perm(std::move(p));
}

SubsetMask SubsetMask::from_indices(int n, const std::vector<int>& idx) {
  SubsetMask s(n);
  for (int k : idx) {
    if (k < 0 || k >= n)
      throw InputError("subset: index out of range: " + std::to_string(k));
    s.set(k, true);
  }
  return s;
}

SubsetMask SubsetMask::from_bits(int n, unsigned long long bits) {
  SubsetMask s(n);
  for (int k = 0; k < n && k < 64; ++k)
    if ((bits >> k) & 1ULL) s.set(k, true);
  return s;
}

std::vector<int> SubsetMask::members() const {
  std::vector<int> m;
  m.reserve(count_);
  for (int i = 0; i < n(); ++i)
    if (in_[i]) m.push_back(i);
  return m;
}

bool SubsetMask::lex_less(const SubsetMask& a, const SubsetMask& b) {
  return a.members() < b.members();
}

}  // namespace linembed
