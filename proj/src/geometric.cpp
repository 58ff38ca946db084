#include "linembed/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "linembed/errors.hpp"
#include "linembed/seriation.hpp"

namespace linembed {

GeometricCheck check_geometric_condition(const Graph& g, const Ordering& ord) {
  int n = g.n();
  GeometricCheck out;
  for (int rv = 0; rv < n; ++rv) {
    int v = ord.perm[rv];
    int lo = rv, hi = rv;
    for (int u : g.neighbors(v)) {
      lo = std::min(lo, ord.pos[u]);
      hi = std::max(hi, ord.pos[u]);
    }
    for (int t = rv + 1; t < hi; ++t) {
      int z = ord.perm[t];
      if (!g.adjacent(v, z)) {
        out.witness = GeometricWitness{v, z, ord.perm[hi]};
        return out;
      }
    }
    for (int t = lo + 1; t < rv; ++t) {
      int z = ord.perm[t];
      if (!g.adjacent(v, z)) {
        out.witness = GeometricWitness{ord.perm[lo], z, v};
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

namespace {

// Count of condition violations, for hill climbing.
long long violation_count(const Graph& g, const Ordering& ord) {
  int n = g.n();
  long long bad = 0;
  for (int rv = 0; rv < n; ++rv) {
    int v = ord.perm[rv];
    int lo = rv, hi = rv;
    for (int u : g.neighbors(v)) {
      lo = std::min(lo, ord.pos[u]);
      hi = std::max(hi, ord.pos[u]);
    }
    for (int t = rv + 1; t < hi; ++t)
      if (!g.adjacent(v, ord.perm[t])) ++bad;
    for (int t = lo + 1; t < rv; ++t)
      if (!g.adjacent(v, ord.perm[t])) ++bad;
  }
  return bad;
}

// Backtracking over orderings. Placing x at the next rank is admissible iff
// (a) every placed vertex that still has an unplaced neighbor is adjacent
// to x, and (b) every placed vertex after x's earliest placed neighbor is
// adjacent to x. Together these enforce exactly the contiguity condition on
// the completed ordering.
struct Backtracker {
  const Graph& g;
  int n;
  std::vector<int> seq;
  std::vector<char> placed;
  std::vector<int> unplaced_deg;

  explicit Backtracker(const Graph& gg)
      : g(gg), n(gg.n()), placed(gg.n(), 0), unplaced_deg(gg.n(), 0) {
    for (int v = 0; v < n; ++v) unplaced_deg[v] = g.degree(v);
  }

  bool admissible(int x) const {
    int k = static_cast<int>(seq.size());
    int earliest = -1;
    for (int i = 0; i < k; ++i)
      if (g.adjacent(seq[i], x)) {
        earliest = i;
        break;
      }
    for (int i = 0; i < k; ++i) {
      bool need = unplaced_deg[seq[i]] > 0 || (earliest >= 0 && i > earliest);
      if (need && !g.adjacent(seq[i], x)) return false;
    }
    return true;
  }

  bool run() {
    if (static_cast<int>(seq.size()) == n) return true;
    for (int x = 0; x < n; ++x) {
      if (placed[x] || !admissible(x)) continue;
      placed[x] = 1;
      seq.push_back(x);
      for (int u : g.neighbors(x)) --unplaced_deg[u];
      if (run()) return true;
      for (int u : g.neighbors(x)) ++unplaced_deg[u];
      seq.pop_back();
      placed[x] = 0;
    }
    return false;
  }
};

}  // namespace

OrderingSearch find_geometric_ordering(const Graph& g, Mode mode,
                                       uint64_t seed) {
  OrderingSearch out;
  out.mode = mode;
  int n = g.n();
  if (n <= 1) {
    out.found = true;
    out.order = Ordering::identity(n);
    out.exhaustive = true;
    return out;
  }
  if (mode == Mode::exact) {
    if (n > 20)
      throw CostGuardError(
          "find_geometric_ordering exact: n > 20 (backtracking over "
          "orderings)");
    Backtracker bt(g);
    out.exhaustive = true;
    if (bt.run()) {
      out.found = true;
      out.order = Ordering::from_perm(std::move(bt.seq));
    }
    return out;
  }
  // heuristic portfolio, each candidate refined by adjacent-swap descent on
  // the violation count
  std::vector<Ordering> starts;
  starts.push_back(fiedler_order(g));
  starts.push_back(lbfs_sweeps(g));
  starts.push_back(degree_order(g));
  starts.push_back(Ordering::identity(n));
  for (int r = 0; r < 8; ++r) starts.push_back(random_order(g, seed + r));
  for (auto& start : starts) {
    Ordering ord = start;
    long long bad = violation_count(g, ord);
    int budget = 200;
    while (bad > 0 && budget-- > 0) {
      long long best_bad = bad;
      int best_k = -1;
      for (int k = 0; k + 1 < n; ++k) {
        std::swap(ord.perm[k], ord.perm[k + 1]);
        std::swap(ord.pos[ord.perm[k]], ord.pos[ord.perm[k + 1]]);
        long long b = violation_count(g, ord);
        if (b < best_bad) {
          best_bad = b;
          best_k = k;
        }
        std::swap(ord.perm[k], ord.perm[k + 1]);
        std::swap(ord.pos[ord.perm[k]], ord.pos[ord.perm[k + 1]]);
      }
      if (best_k < 0) break;
      std::swap(ord.perm[best_k], ord.perm[best_k + 1]);
      std::swap(ord.pos[ord.perm[best_k]], ord.pos[ord.perm[best_k + 1]]);
      bad = best_bad;
    }
    if (bad == 0 && check_geometric_condition(g, ord).ok) {
      out.found = true;
      out.order = std::move(ord);
      return out;
    }
  }
  return out;
}

LineEmbedding construct_line_embedding(const Graph& g, const Ordering& ord) {
  auto chk = check_geometric_condition(g, ord);
  if (!chk.ok) {
    auto& w = *chk.witness;
    std::ostringstream ws;
    ws << "{\"v\":" << w.v << ",\"z\":" << w.z << ",\"w\":" << w.w << "}";
    throw PreconditionError("ordering fails the contiguity condition",
                            ws.str());
  }
  int n = g.n();
  LineEmbedding emb;
  emb.coord.assign(n, 0.0);
  for (int k = 1; k < n; ++k) {
    int u = ord.perm[k];
    int j = -1;
    for (int t = 0; t < k; ++t)
      if (g.adjacent(ord.perm[t], u)) {
        j = t;
        break;
      }
    double prev = emb.coord[ord.perm[k - 1]];
    if (j < 0) {
      emb.coord[u] = prev + 2.0;
      continue;
    }
    // window: above every earlier non-neighbor by >= 1, strictly above the
    // previous coordinate, strictly below coord(first neighbor) + 1
    double lo = prev;
    if (j > 0) lo = std::max(lo, emb.coord[ord.perm[j - 1]] + 1.0);
    double hi = emb.coord[ord.perm[j]] + 1.0;
    emb.coord[u] = lo + std::min(0.5, (hi - lo) / 2);
  }
  return emb;
}

bool embedding_realizes(const Graph& g, const LineEmbedding& emb) {
  int n = g.n();
  if (static_cast<int>(emb.coord.size()) != n) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool close = std::fabs(emb.coord[u] - emb.coord[v]) < 1.0;
      if (close != g.adjacent(u, v)) return false;
    }
  return true;
}

}  // namespace linembed
