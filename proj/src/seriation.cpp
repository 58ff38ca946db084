#include "linembed/seriation.hpp"

#include <algorithm>
#include <list>
#include <numeric>

#include <Eigen/Dense>

#include "linembed/rng.hpp"

namespace linembed {

Ordering fiedler_order(const Graph& g) {
  int n = g.n();
  if (n == 1) return Ordering::identity(1);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (auto& [u, v] : g.edges()) {
    lap(u, v) -= 1;
    lap(v, u) -= 1;
    lap(u, u) += 1;
    lap(v, v) += 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  Eigen::VectorXd f = es.eigenvectors().col(1);
  for (int i = 0; i < n; ++i) {
    if (f(i) > 1e-12) break;
    if (f(i) < -1e-12) {
      f = -f;
      break;
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return f(a) < f(b); });
  return Ordering::from_perm(std::move(perm));
}

Ordering lbfs_order(const Graph& g, const std::vector<int>& tie_break) {
  int n = g.n();
  auto prio = [&](int v) { return tie_break.empty() ? -v : tie_break[v]; };
  // partition refinement over a list of classes, each kept sorted by
  // descending priority
  std::list<std::vector<int>> classes;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::sort(all.begin(), all.end(),
              [&](int a, int b) { return prio(a) > prio(b); });
    classes.push_back(std::move(all));
  }
  std::vector<char> done(n, 0);
  std::vector<int> perm;
  perm.reserve(n);
  while (!classes.empty()) {
    auto& head = classes.front();
    int v = head.front();
    head.erase(head.begin());
    if (head.empty()) classes.pop_front();
    done[v] = 1;
    perm.push_back(v);
    std::vector<char> is_nbr(n, 0);
    for (int u : g.neighbors(v)) is_nbr[u] = 1;
    for (auto it = classes.begin(); it != classes.end();) {
      std::vector<int> in, out;
      for (int u : *it) (is_nbr[u] ? in : out).push_back(u);
      if (in.empty() || out.empty()) {
        ++it;
        continue;
      }
      *it = std::move(out);
      classes.insert(it, std::move(in));
      ++it;
    }
  }
  return Ordering::from_perm(std::move(perm));
}

Ordering lbfs_sweeps(const Graph& g, int sweeps) {
  Ordering ord = lbfs_order(g, {});
  for (int s = 1; s < sweeps; ++s) ord = lbfs_order(g, ord.pos);
  return ord;
}

Ordering degree_order(const Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return g.degree(a) < g.degree(b);
  });
  return Ordering::from_perm(std::move(perm));
}

Ordering random_order(const Graph& g, uint64_t seed) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(mix_seed(seed, kStreamOrders));
  for (int i = g.n() - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return Ordering::from_perm(std::move(perm));
}

}  // namespace linembed
