#include "linembed/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "linembed/errors.hpp"
#include "linembed/rng.hpp"
#include "linembed/seriation.hpp"

namespace linembed {

namespace {

inline long long pos_ll(long long x) { return x > 0 ? x : 0; }
inline double pos_d(double x) { return x > 0 ? x : 0; }

// Ranked adjacency: adj[i * n + j] = 1 iff perm[i] ~ perm[j].
std::vector<uint8_t> ranked_adjacency(const Graph& g, const Ordering& ord) {
  int n = g.n();
  std::vector<uint8_t> adj((size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[(size_t)i * n + j] = g.adjacent(ord.perm[i], ord.perm[j]) ? 1 : 0;
  return adj;
}

// Subset-sum state for a fixed ordering of a graph: for rank pairs i < j,
//   m1(i,j) = |N(v_j) n A n D_i| - |N(v_i) n A n D_i|   (D_i = ranks < i)
//   m2(i,j) = |N(v_i) n A n U_j| - |N(v_j) n A n U_j|   (U_j = ranks > j)
// and total = sum of positive parts, so gamma-star(ord, A) = total / n^3.
struct GraphSubsetState {
  int n;
  const std::vector<uint8_t>& adj;  // ranked
  std::vector<int> m1, m2;          // n*n, entries i<j used
  std::vector<char> in;             // membership by rank
  long long total = 0;

  GraphSubsetState(int nn, const std::vector<uint8_t>& a)
      : n(nn), adj(a), m1((size_t)nn * nn, 0), m2((size_t)nn * nn, 0),
        in(nn, 0) {}

  // flip rank t; updates total incrementally, O(n^2)
  void flip(int t) {
    int s = in[t] ? -1 : 1;
    in[t] = !in[t];
    const uint8_t* at = &adj[(size_t)t * n];
    for (int i = t + 1; i < n; ++i) {
      int* row = &m1[(size_t)i * n];
      int ai = at[i];
      for (int j = i + 1; j < n; ++j) {
        int d = at[j] - ai;
        if (!d) continue;
        int e = row[j], ne = e + s * d;
        total += pos_ll(ne) - pos_ll(e);
        row[j] = ne;
      }
    }
    for (int j = 1; j < t; ++j) {
      int aj = at[j];
      for (int i = 0; i < j; ++i) {
        int d = at[i] - aj;
        if (!d) continue;
        size_t k = (size_t)i * n + j;
        int e = m2[k], ne = e + s * d;
        total += pos_ll(ne) - pos_ll(e);
        m2[k] = ne;
      }
    }
  }

  // total change if rank t were flipped, without committing
  long long flip_delta(int t) const {
    int s = in[t] ? -1 : 1;
    const uint8_t* at = &adj[(size_t)t * n];
    long long delta = 0;
    for (int i = t + 1; i < n; ++i) {
      const int* row = &m1[(size_t)i * n];
      int ai = at[i];
      for (int j = i + 1; j < n; ++j) {
        int d = at[j] - ai;
        if (!d) continue;
        int e = row[j];
        delta += pos_ll(e + s * d) - pos_ll(e);
      }
    }
    for (int j = 1; j < t; ++j) {
      int aj = at[j];
      for (int i = 0; i < j; ++i) {
        int d = at[i] - aj;
        if (!d) continue;
        int e = m2[(size_t)i * n + j];
        delta += pos_ll(e + s * d) - pos_ll(e);
      }
    }
    return delta;
  }

  void set_mask_bits(unsigned long long bits) {
    for (int t = 0; t < n; ++t) {
      bool want = (bits >> t) & 1ULL;
      if (want != static_cast<bool>(in[t])) flip(t);
    }
  }

  SubsetMask mask(const Ordering& ord) const {
    SubsetMask a(n);
    for (int t = 0; t < n; ++t)
      if (in[t]) a.set(ord.perm[t], true);
    return a;
  }
};

struct GraySearchResult {
  long long best = 0;
  unsigned long long best_bits = 0;  // by rank
  bool aborted = false;
};

// Max over all 2^n subsets via Gray-code flips; lex-least maximizer by
// sorted vertex-id member list. Aborts once the running max reaches
// abort_at (used by the ordering-level branch and bound).
GraySearchResult gray_subset_max(GraphSubsetState& st, const Ordering& ord,
                                 long long abort_at) {
  int n = st.n;
  GraySearchResult res;
  SubsetMask best_mask = SubsetMask::none(n);
  unsigned long long g_prev = 0;
  unsigned long long steps = 1ULL << n;
  for (unsigned long long k = 1; k < steps; ++k) {
    unsigned long long gray = k ^ (k >> 1);
    int bit = __builtin_ctzll(gray ^ g_prev);
    g_prev = gray;
    st.flip(bit);
    if (st.total > res.best) {
      res.best = st.total;
      res.best_bits = gray;
      best_mask = st.mask(ord);
      if (res.best >= abort_at) {
        res.aborted = true;
        return res;
      }
    } else if (st.total == res.best) {
      SubsetMask cand = st.mask(ord);
      if (SubsetMask::lex_less(cand, best_mask)) {
        res.best_bits = gray;
        best_mask = cand;
      }
    }
  }
  return res;
}

// Greedy single-flip ascent from the current state.
void flip_ascent(GraphSubsetState& st) {
  int n = st.n;
  for (int sweep = 0; sweep < 10 * n + 20; ++sweep) {
    long long best_delta = 0;
    int best_t = -1;
    for (int t = 0; t < n; ++t) {
      long long d = st.flip_delta(t);
      if (d > best_delta) {
        best_delta = d;
        best_t = t;
      }
    }
    if (best_t < 0) break;
    st.flip(best_t);
  }
}

long long n_cubed(int n) { return (long long)n * n * n; }

}  // namespace

Rat gamma_star_fixed(const Graph& g, const Ordering& ord,
                     const SubsetMask& a) {
  int n = g.n();
  if (ord.n() != n || a.n() != n)
    throw InputError("gamma_star_fixed: size mismatch");
  if (n == 0) return Rat(0);
  // prefix[v][i] = |N(v) n A n {ranks < i}|
  std::vector<int> prefix((size_t)n * (n + 1), 0);
  for (int v = 0; v < n; ++v) {
    int* row = &prefix[(size_t)v * (n + 1)];
    for (int i = 0; i < n; ++i) {
      int w = ord.perm[i];
      row[i + 1] = row[i] + ((a.contains(w) && g.adjacent(v, w)) ? 1 : 0);
    }
  }
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    int u = ord.perm[i];
    const int* pu = &prefix[(size_t)u * (n + 1)];
    for (int j = i + 1; j < n; ++j) {
      int v = ord.perm[j];
      const int* pv = &prefix[(size_t)v * (n + 1)];
      total += pos_ll((long long)pv[i] - pu[i]);
      total += pos_ll((long long)(pu[n] - pu[j + 1]) - (pv[n] - pv[j + 1]));
    }
  }
  return Rat(total, n_cubed(n));
}

GammaStarReport gamma_star_order(const Graph& g, const Ordering& ord,
                                 Mode mode, uint64_t seed, int restarts) {
  int n = g.n();
  if (ord.n() != n) throw InputError("gamma_star_order: size mismatch");
  GammaStarReport rep;
  rep.order = ord;
  rep.mode = mode;
  rep.subset = SubsetMask::none(std::max(n, 0));
  if (n == 0) {
    rep.exhaustive = true;
    return rep;
  }
  auto adj = ranked_adjacency(g, ord);
  GraphSubsetState st(n, adj);
  if (mode == Mode::exact) {
    if (n > 20)
      throw CostGuardError("gamma_star_order exact: n > 20 (2^n subsets)");
    auto res = gray_subset_max(st, ord, INT64_MAX);
    rep.value = Rat(res.best, n_cubed(n));
    GraphSubsetState best(n, adj);
    best.set_mask_bits(res.best_bits);
    rep.subset = best.mask(ord);
    rep.exhaustive = true;
    return rep;
  }
  long long best = -1;
  SubsetMask best_mask = SubsetMask::none(n);
  int used = 0;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    unsigned long long bits = 0;
    if (r == 0) {
      bits = n >= 64 ? ~0ULL : ((1ULL << n) - 1);  // all vertices
    } else {
      Rng rng(mix_seed(seed, kStreamSubsets, r));
      for (int t = 0; t < n && t < 64; ++t)
        if (rng.bernoulli(0.5)) bits |= 1ULL << t;
    }
    if (n <= 64) {
      st.set_mask_bits(bits);
    } else {
      Rng rng(mix_seed(seed, kStreamSubsets, r));
      for (int t = 0; t < n; ++t) {
        bool want = r == 0 ? true : rng.bernoulli(0.5);
        if (want != static_cast<bool>(st.in[t])) st.flip(t);
      }
    }
    flip_ascent(st);
    ++used;
    if (st.total > best) {
      best = st.total;
      best_mask = st.mask(ord);
    } else if (st.total == best) {
      SubsetMask cand = st.mask(ord);
      if (SubsetMask::lex_less(cand, best_mask)) best_mask = cand;
    }
  }
  rep.value = Rat(best, n_cubed(n));
  rep.subset = best_mask;
  rep.restarts_used = used;
  return rep;
}

namespace {

// Max over singleton subsets, a cheap lower bound on the subset max.
long long singleton_max(const std::vector<uint8_t>& adj, int n) {
  long long best = 0;
  for (int t = 0; t < n; ++t) {
    const uint8_t* at = &adj[(size_t)t * n];
    long long tot = 0;
    for (int i = t + 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) tot += pos_ll(at[j] - at[i]);
    for (int j = 1; j < t; ++j)
      for (int i = 0; i < j; ++i) tot += pos_ll(at[i] - at[j]);
    best = std::max(best, tot);
  }
  return best;
}

}  // namespace

GammaStarReport gamma_star(const Graph& g, Mode mode, uint64_t seed,
                           int restarts, const std::vector<Ordering>& extra) {
  int n = g.n();
  GammaStarReport rep;
  rep.mode = mode;
  rep.subset = SubsetMask::none(std::max(n, 0));
  if (n <= 1) {
    rep.order = Ordering::identity(std::max(n, 0));
    rep.exhaustive = true;
    return rep;
  }
  // zero certificate: an ordering passing the contiguity condition proves
  // the minimum is exactly 0
  auto cert = find_geometric_ordering(g, mode, seed);
  if (cert.found) {
    rep.order = *cert.order;
    rep.value = Rat(0);
    rep.exhaustive = true;  // 0 is a global lower bound
    return rep;
  }
  if (mode == Mode::exact) {
    // cert.exhaustive here: no geometric ordering exists, so the minimum is
    // positive and branch and bound over orderings is sound
    if (n > 9)
      throw CostGuardError("gamma_star exact: n > 9 (n! orderings)");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long best = INT64_MAX;
    std::vector<int> best_perm;
    unsigned long long best_bits = 0;
    do {
      // reversal gives the same value; keep the lex-smaller representative
      std::vector<int> rev(perm.rbegin(), perm.rend());
      if (rev < perm) continue;
      Ordering ord = Ordering::from_perm(perm);
      auto adj = ranked_adjacency(g, ord);
      if (singleton_max(adj, n) >= best) continue;
      GraphSubsetState st(n, adj);
      auto res = gray_subset_max(st, ord, best);
      if (!res.aborted && res.best < best) {
        best = res.best;
        best_perm = perm;
        best_bits = res.best_bits;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.order = Ordering::from_perm(best_perm);
    auto adj = ranked_adjacency(g, rep.order);
    GraphSubsetState st(n, adj);
    st.set_mask_bits(best_bits);
    rep.subset = st.mask(rep.order);
    rep.value = Rat(best, n_cubed(n));
    rep.exhaustive = true;
    return rep;
  }
  // heuristic: seriation portfolio + random restarts, each scored by the
  // heuristic subset max; adjacent-swap descent on the winner for small n
  std::vector<Ordering> starts;
  starts.push_back(fiedler_order(g));
  starts.push_back(lbfs_sweeps(g));
  starts.push_back(degree_order(g));
  starts.push_back(Ordering::identity(n));
  for (auto& e : extra) starts.push_back(e);
  for (int r = 0; r < restarts; ++r)
    starts.push_back(random_order(g, mix_seed(seed, kStreamOrders, r)));
  bool have = false;
  Rat best_val;
  GammaStarReport best_rep;
  int used = 0;
  for (auto& ord : starts) {
    auto r = gamma_star_order(g, ord, Mode::heuristic, seed, 4);
    ++used;
    if (!have || r.value < best_val) {
      have = true;
      best_val = r.value;
      best_rep = r;
    }
  }
  if (n <= 24 && best_val.num != 0) {
    Ordering cur = best_rep.order;
    for (int sweep = 0; sweep < 5; ++sweep) {
      bool improved = false;
      for (int k = 0; k + 1 < n; ++k) {
        Ordering cand = cur;
        std::swap(cand.perm[k], cand.perm[k + 1]);
        cand = Ordering::from_perm(cand.perm);
        auto r = gamma_star_order(g, cand, Mode::heuristic, seed, 2);
        if (r.value < best_val) {
          best_val = r.value;
          best_rep = r;
          cur = cand;
          improved = true;
        }
      }
      if (!improved || best_val.num == 0) break;
    }
  }
  best_rep.mode = Mode::heuristic;
  best_rep.exhaustive = false;
  best_rep.restarts_used = used;
  return best_rep;
}

// ---- graphon side ----------------------------------------------------------

namespace {

// E(s, d) = integral over [0,1] of the positive part of s + tau d.
double e_pospart(double s, double d) {
  if (d == 0) return pos_d(s);
  if (d > 0) {
    if (s >= 0) return s + d / 2;
    if (s + d <= 0) return 0;
    return (s + d) * (s + d) / (2 * d);
  }
  if (s <= 0) return 0;
  if (s + d >= 0) return s + d / 2;
  return s * s / (-2 * d);
}

// 2L * E(s, d) for integer s, d with |d| <= scale and L = lcm(1..scale):
// every branch lands on an integer.
long long e_pospart_scaled(long long s, long long d, long long twoL) {
  if (d == 0) return twoL * pos_ll(s);
  if (d > 0) {
    if (s >= 0) return twoL * s + (twoL / 2) * d;
    if (s + d <= 0) return 0;
    return (twoL / (2 * d)) * (s + d) * (s + d);
  }
  if (s <= 0) return 0;
  if (s + d >= 0) return twoL * s + (twoL / 2) * d;
  return (twoL / (-2 * d)) * s * s;
}

// Subset state over blocks for the closed-form Gamma(w, A) of a step
// graphon: per pair i < j the contribution is E(s1, d1) + E(s2, d2) with
//   s1(i,j) = sum_{k < i, k in A} (v_kj - v_ki),  d1 = [i in A](v_ij - v_ii)
//   s2(i,j) = sum_{k > j, k in A} (v_ki - v_kj),  d2 = [j in A](v_ij - v_jj)
// normalized by n^3. Templated over double and exact-integer arithmetic.
template <typename V, typename Acc>
struct BlockSubsetState {
  int n;
  const std::vector<V>& v;  // row-major block values
  long long twoL;           // exact path only
  std::vector<V> s1, s2;
  std::vector<Acc> contrib;  // cached E(s1,d1)+E(s2,d2) per pair
  std::vector<char> in;
  Acc total = 0;

  BlockSubsetState(int nn, const std::vector<V>& vals, long long tl)
      : n(nn), v(vals), twoL(tl), s1((size_t)nn * nn, 0),
        s2((size_t)nn * nn, 0), contrib((size_t)nn * nn, 0), in(nn, 0) {}

  V val(int i, int j) const { return v[(size_t)i * n + j]; }

  Acc pair_e(int i, int j) const {
    size_t k = (size_t)i * n + j;
    V d1 = in[i] ? val(i, j) - val(i, i) : V(0);
    V d2 = in[j] ? val(i, j) - val(j, j) : V(0);
    if constexpr (std::is_same_v<Acc, long long>)
      return e_pospart_scaled(s1[k], d1, twoL) +
             e_pospart_scaled(s2[k], d2, twoL);
    else
      return e_pospart(s1[k], d1) + e_pospart(s2[k], d2);
  }

  void refresh(int i, int j) {
    size_t k = (size_t)i * n + j;
    Acc e = pair_e(i, j);
    total += e - contrib[k];
    contrib[k] = e;
  }

  void flip(int t) {
    V s = in[t] ? V(-1) : V(1);
    in[t] = !in[t];
    for (int i = t + 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        s1[(size_t)i * n + j] += s * (val(t, j) - val(t, i));
        refresh(i, j);
      }
    for (int j = 1; j < t; ++j)
      for (int i = 0; i < j; ++i) {
        s2[(size_t)i * n + j] += s * (val(t, i) - val(t, j));
        refresh(i, j);
      }
    for (int j = t + 1; j < n; ++j) refresh(t, j);  // d1 toggled
    for (int i = 0; i < t; ++i) refresh(i, t);      // d2 toggled
  }

  Acc flip_delta(int t) {
    Acc before = total;
    flip(t);
    Acc after = total;
    flip(t);
    (void)before;
    return after - before;
  }

  SubsetMask mask() const {
    SubsetMask a(n);
    for (int t = 0; t < n; ++t)
      if (in[t]) a.set(t, true);
    return a;
  }

  void set_mask(const SubsetMask& a) {
    for (int t = 0; t < n; ++t)
      if (a.contains(t) != static_cast<bool>(in[t])) flip(t);
  }
};

template <typename State, typename Acc>
struct BlockSearchOut {
  Acc best = 0;
  SubsetMask best_mask;
  bool aborted = false;
};

template <typename State, typename Acc>
BlockSearchOut<State, Acc> block_gray_max(State& st, Acc abort_at) {
  int n = st.n;
  BlockSearchOut<State, Acc> res;
  res.best_mask = SubsetMask::none(n);
  unsigned long long g_prev = 0;
  unsigned long long steps = 1ULL << n;
  for (unsigned long long k = 1; k < steps; ++k) {
    unsigned long long gray = k ^ (k >> 1);
    int bit = __builtin_ctzll(gray ^ g_prev);
    g_prev = gray;
    st.flip(bit);
    if (st.total > res.best) {
      res.best = st.total;
      res.best_mask = st.mask();
      if (res.best >= abort_at) {
        res.aborted = true;
        return res;
      }
    } else if (st.total == res.best) {
      SubsetMask cand = st.mask();
      if (SubsetMask::lex_less(cand, res.best_mask)) res.best_mask = cand;
    }
  }
  return res;
}

template <typename State, typename Acc>
BlockSearchOut<State, Acc> block_heuristic_max(State& st, int n, uint64_t seed,
                                               int restarts) {
  BlockSearchOut<State, Acc> res;
  res.best_mask = SubsetMask::none(n);
  bool have = false;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    SubsetMask start(n);
    if (r == 0) {
      start = SubsetMask::all(n);
    } else {
      Rng rng(mix_seed(seed, kStreamSubsets, r));
      for (int t = 0; t < n; ++t)
        if (rng.bernoulli(0.5)) start.set(t, true);
    }
    st.set_mask(start);
    for (int sweep = 0; sweep < 10 * n + 20; ++sweep) {
      Acc best_delta = 0;
      int best_t = -1;
      for (int t = 0; t < n; ++t) {
        Acc d = st.flip_delta(t);
        if (d > best_delta) {
          best_delta = d;
          best_t = t;
        }
      }
      if (best_t < 0) break;
      st.flip(best_t);
    }
    if (!have || st.total > res.best) {
      have = true;
      res.best = st.total;
      res.best_mask = st.mask();
    } else if (st.total == res.best) {
      SubsetMask cand = st.mask();
      if (SubsetMask::lex_less(cand, res.best_mask)) res.best_mask = cand;
    }
  }
  return res;
}

long long two_lcm(long long scale) {
  long long l = 1;
  for (long long k = 2; k <= scale; ++k) l = std::lcm(l, k);
  return 2 * l;
}

}  // namespace

double g_w(const StepGraphon& w, const SubsetMask& a) {
  int n = w.n();
  if (a.n() != n) throw InputError("g_w: subset size mismatch");
  double total = 0;
  // F[j][i] = sum_{k < i, k in A} v_kj ; G[i][j] = sum_{k > j, k in A} v_ki
  std::vector<double> F((size_t)n * (n + 1), 0), G((size_t)n * (n + 1), 0);
  for (int j = 0; j < n; ++j) {
    double* row = &F[(size_t)j * (n + 1)];
    for (int k = 0; k < n; ++k)
      row[k + 1] = row[k] + (a.contains(k) ? w.value(k, j) : 0.0);
  }
  for (int i = 0; i < n; ++i) {
    double* row = &G[(size_t)i * (n + 1)];
    row[n] = 0;
    for (int k = n - 1; k >= 0; --k)
      row[k] = row[k + 1] + (a.contains(k) ? w.value(k, i) : 0.0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      total += pos_d(F[(size_t)j * (n + 1) + i] - F[(size_t)i * (n + 1) + i]);
      total += pos_d(G[(size_t)i * (n + 1) + j + 1] -
                     G[(size_t)j * (n + 1) + j + 1]);
    }
  return total / static_cast<double>(n_cubed(n));
}

Rat g_w_exact(const QuantizedGraphon& w, const SubsetMask& a) {
  int n = w.n;
  if (a.n() != n) throw InputError("g_w_exact: subset size mismatch");
  long long total = 0;
  std::vector<long long> F((size_t)n * (n + 1), 0), G((size_t)n * (n + 1), 0);
  for (int j = 0; j < n; ++j) {
    long long* row = &F[(size_t)j * (n + 1)];
    for (int k = 0; k < n; ++k)
      row[k + 1] = row[k] + (a.contains(k) ? w.value(k, j) : 0);
  }
  for (int i = 0; i < n; ++i) {
    long long* row = &G[(size_t)i * (n + 1)];
    for (int k = n - 1; k >= 0; --k)
      row[k] = row[k + 1] + (a.contains(k) ? w.value(k, i) : 0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      total += pos_ll(F[(size_t)j * (n + 1) + i] - F[(size_t)i * (n + 1) + i]);
      total += pos_ll(G[(size_t)i * (n + 1) + j + 1] -
                      G[(size_t)j * (n + 1) + j + 1]);
    }
  return Rat::from128(total, (__int128)w.scale * n_cubed(n));
}

double gamma_block(const StepGraphon& w, const SubsetMask& a) {
  int n = w.n();
  if (a.n() != n) throw InputError("gamma_block: subset size mismatch");
  BlockSubsetState<double, double> st(n, w.values(), 0);
  st.set_mask(a);
  return st.total / static_cast<double>(n_cubed(n));
}

Rat gamma_block_exact(const QuantizedGraphon& w, const SubsetMask& a) {
  int n = w.n;
  if (a.n() != n) throw InputError("gamma_block_exact: subset size mismatch");
  long long twoL = two_lcm(w.scale);
  BlockSubsetState<long long, long long> st(n, w.q, twoL);
  st.set_mask(a);
  return Rat::from128(st.total, (__int128)twoL * w.scale * n_cubed(n));
}

namespace {

GammaReport gamma_quantized_impl(const QuantizedGraphon& qw, Mode mode,
                                 uint64_t seed, int restarts, double c) {
  int n = qw.n;
  long long twoL = two_lcm(qw.scale);
  BlockSubsetState<long long, long long> st(n, qw.q, twoL);
  GammaReport rep;
  rep.mode = mode;
  rep.bound_c = c;
  if (mode == Mode::exact) {
    if (n > 20) throw CostGuardError("gamma exact: n > 20 blocks (2^n subsets)");
    auto res = block_gray_max<decltype(st), long long>(st, INT64_MAX);
    rep.exact = Rat::from128(res.best, (__int128)twoL * qw.scale * n_cubed(n));
    rep.subset = res.best_mask;
    rep.exhaustive = true;
  } else {
    auto res = block_heuristic_max<decltype(st), long long>(st, n, seed,
                                                            restarts);
    rep.exact = Rat::from128(res.best, (__int128)twoL * qw.scale * n_cubed(n));
    rep.subset = res.best_mask;
  }
  rep.estimate = rep.exact->to_double();
  rep.lower = rep.estimate;
  rep.upper = rep.estimate + 4 * c / n;
  return rep;
}

}  // namespace

GammaReport gamma(const StepGraphon& w, Mode mode, uint64_t seed,
                  int restarts) {
  if (!w.in_w0()) throw InputError("gamma: values must lie in [0,1]");
  int n = w.n();
  double c = w.bound();
  if (auto scale = detect_quantization(w))
    return gamma_quantized_impl(QuantizedGraphon::from_step(w, *scale), mode,
                                seed, restarts, c);
  BlockSubsetState<double, double> st(n, w.values(), 0);
  GammaReport rep;
  rep.mode = mode;
  rep.bound_c = c;
  if (mode == Mode::exact) {
    if (n > 20) throw CostGuardError("gamma exact: n > 20 blocks (2^n subsets)");
    auto res = block_gray_max<decltype(st), double>(
        st, std::numeric_limits<double>::infinity());
    rep.subset = res.best_mask;
    rep.exhaustive = true;
  } else {
    auto res = block_heuristic_max<decltype(st), double>(st, n, seed, restarts);
    rep.subset = res.best_mask;
  }
  // re-evaluate the winning subset from scratch (no accumulated drift)
  rep.estimate = gamma_block(w, rep.subset);
  rep.lower = rep.estimate;
  rep.upper = rep.estimate + 4 * c / n;
  return rep;
}

GammaReport gamma_exact_quantized(const QuantizedGraphon& w, Mode mode,
                                  uint64_t seed, int restarts) {
  double c = 0;
  for (long long q : w.q)
    c = std::max(c, std::fabs(static_cast<double>(q) / w.scale));
  return gamma_quantized_impl(w, mode, seed, restarts, c);
}

GammaTildeReport gamma_tilde(const StepGraphon& w, Mode mode, uint64_t seed,
                             int restarts) {
  if (!w.in_w0()) throw InputError("gamma_tilde: values must lie in [0,1]");
  int n = w.n();
  GammaTildeReport rep;
  rep.mode = mode;
  if (mode == Mode::exact) {
    if (n > 8)
      throw CostGuardError("gamma_tilde exact: n > 8 blocks (n! permutations)");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool have = false;
    do {
      std::vector<int> rev(perm.rbegin(), perm.rend());
      if (rev < perm) continue;  // reflection-invariant
      auto g = gamma(w.permuted(perm), Mode::exact, seed, restarts);
      bool better = !have || g.estimate < rep.estimate ||
                    (g.exact && rep.exact && *g.exact < *rep.exact);
      if (better) {
        have = true;
        rep.estimate = g.estimate;
        rep.exact = g.exact;
        rep.perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.exhaustive = true;
    return rep;
  }
  std::vector<std::vector<int>> starts;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  starts.push_back(id);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    std::vector<int> p = id;
    Rng rng(mix_seed(seed, kStreamOrders, 1000 + r));
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[rng.below(static_cast<uint64_t>(i) + 1)]);
    starts.push_back(std::move(p));
  }
  bool have = false;
  for (auto& p0 : starts) {
    std::vector<int> p = p0;
    auto g = gamma(w.permuted(p), Mode::heuristic, seed, 4);
    double cur = g.estimate;
    bool improved = true;
    while (improved) {
      improved = false;
      for (int k = 0; k + 1 < n; ++k) {
        std::vector<int> q = p;
        std::swap(q[k], q[k + 1]);
        auto gq = gamma(w.permuted(q), Mode::heuristic, seed, 4);
        if (gq.estimate < cur - 1e-15) {
          cur = gq.estimate;
          g = gq;
          p = q;
          improved = true;
        }
      }
    }
    if (!have || cur < rep.estimate) {
      have = true;
      rep.estimate = cur;
      rep.exact = g.exact;
      rep.perm = p;
    }
  }
  return rep;
}

double gamma_grid_oracle(const StepGraphon& w, const SubsetMask& a, int m) {
  int n = w.n();
  if (a.n() != n) throw InputError("gamma_grid_oracle: subset size mismatch");
  // midpoint grid z_p = (p + 1/2)/m; T[q][p] = sum_{t < p, z_t in A} w(z_t, z_q)
  std::vector<int> blk(m);
  for (int p = 0; p < m; ++p) blk[p] = w.block_of((p + 0.5) / m);
  std::vector<double> T((size_t)m * (m + 1), 0), S((size_t)m * (m + 1), 0);
  for (int q = 0; q < m; ++q) {
    double* row = &T[(size_t)q * (m + 1)];
    for (int t = 0; t < m; ++t)
      row[t + 1] =
          row[t] + (a.contains(blk[t]) ? w.value(blk[t], blk[q]) : 0.0);
    double* srow = &S[(size_t)q * (m + 1)];
    srow[m] = 0;
    for (int t = m - 1; t >= 0; --t)
      srow[t] =
          srow[t + 1] + (a.contains(blk[t]) ? w.value(blk[t], blk[q]) : 0.0);
  }
  double total = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      total += pos_d(T[(size_t)q * (m + 1) + p] - T[(size_t)p * (m + 1) + p]);
      total += pos_d(S[(size_t)p * (m + 1) + q + 1] -
                     S[(size_t)q * (m + 1) + q + 1]);
    }
  return total / (static_cast<double>(m) * m * m);
}

double gamma_grid_oracle(const BoundarySpec& b, const SubsetMask& a,
                         int mask_blocks, int m) {
  if (a.n() != mask_blocks)
    throw InputError("gamma_grid_oracle: subset size mismatch");
  std::vector<double> z(m);
  std::vector<char> inA(m);
  for (int p = 0; p < m; ++p) {
    z[p] = (p + 0.5) / m;
    int blk = std::min(static_cast<int>(z[p] * mask_blocks), mask_blocks - 1);
    inA[p] = a.contains(blk) ? 1 : 0;
  }
  std::vector<int> T((size_t)m * (m + 1), 0), S((size_t)m * (m + 1), 0);
  for (int q = 0; q < m; ++q) {
    int* row = &T[(size_t)q * (m + 1)];
    for (int t = 0; t < m; ++t)
      row[t + 1] = row[t] + (inA[t] && b.contains(z[t], z[q]) ? 1 : 0);
    int* srow = &S[(size_t)q * (m + 1)];
    srow[m] = 0;
    for (int t = m - 1; t >= 0; --t)
      srow[t] = srow[t + 1] + (inA[t] && b.contains(z[t], z[q]) ? 1 : 0);
  }
  double total = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      total += pos_ll(T[(size_t)q * (m + 1) + p] - T[(size_t)p * (m + 1) + p]);
      total += pos_ll(S[(size_t)p * (m + 1) + q + 1] -
                      S[(size_t)q * (m + 1) + q + 1]);
    }
  return total / (static_cast<double>(m) * m * m);
}

bool diagonally_increasing_check(const StepGraphon& w) {
  // tolerance absorbs rounding in block averages computed by integration
  const double eps = 1e-9;
  int n = w.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j + 1 < n; ++j)
      if (w.value(i, j) + eps < w.value(i, j + 1)) return false;
    for (int j = i; j - 1 >= 0; --j)
      if (w.value(i, j) + eps < w.value(i, j - 1)) return false;
  }
  return true;
}

}  // namespace linembed
