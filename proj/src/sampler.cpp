#include "linembed/sampler.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "linembed/errors.hpp"
#include "linembed/rng.hpp"

namespace linembed {

namespace {

std::vector<double> draw_latents(int n, uint64_t seed) {
  Rng rng(mix_seed(seed, kStreamLatents));
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = rng.uniform01();
  return xs;
}

Ordering stable_argsort(const std::vector<double>& xs) {
  std::vector<int> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return xs[a] < xs[b]; });
  return Ordering::from_perm(std::move(perm));
}

}  // namespace

SampleRecord sample_w_random(const StepGraphon& w, int n, uint64_t seed) {
  if (n <= 0) throw InputError("sample_w_random: n must be positive");
  if (!w.in_w0())
    throw InputError("sample_w_random: values must lie in [0,1]");
  SampleRecord rec;
  rec.seed = seed;
  rec.source = "step";
  rec.latents = draw_latents(n, seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    Rng row(mix_seed(seed, kStreamEdges, i));
    for (int j = i + 1; j < n; ++j)
      if (row.bernoulli(w.eval(rec.latents[i], rec.latents[j])))
        edges.emplace_back(i, j);
  }
  rec.graph = Graph(n, edges);
  rec.latent_order = stable_argsort(rec.latents);
  return rec;
}

SampleRecord sample_w_random(const BoundarySpec& b, int n, uint64_t seed) {
  if (n <= 0) throw InputError("sample_w_random: n must be positive");
  SampleRecord rec;
  rec.seed = seed;
  rec.source = "boundary";
  rec.latents = draw_latents(n, seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (b.contains(rec.latents[i], rec.latents[j]))
        edges.emplace_back(i, j);
  rec.graph = Graph(n, edges);
  rec.latent_order = stable_argsort(rec.latents);
  return rec;
}

SampleRecord sample_geometric_cdf(const CdfSpec& cdf, int n, uint64_t seed) {
  if (n <= 0) throw InputError("sample_geometric_cdf: n must be positive");
  SampleRecord rec;
  rec.seed = seed;
  rec.source = "cdf";
  rec.latents = draw_latents(n, seed);
  std::vector<double> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = cdf.inverse(rec.latents[i]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(pos[i] - pos[j]) <= 1.0) edges.emplace_back(i, j);
  rec.graph = Graph(n, edges);
  rec.latent_order = stable_argsort(rec.latents);
  return rec;
}

BoundarySpec graphon_from_cdf(const CdfSpec& cdf) {
  double sup = cdf.bp.back().first;
  auto rx = [&](double x) {
    return cdf.eval(std::min(cdf.inverse(x) + 1.0, sup));
  };
  // kinks can occur where F^{-1} has a kink (x = F at a breakpoint) or where
  // F^{-1}(x) + 1 crosses a breakpoint of F
  std::vector<double> xs = {0.0, 1.0};
  for (auto& [t, f] : cdf.bp) {
    xs.push_back(f);
    xs.push_back(cdf.eval(t - 1.0));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<double, double>> bp;
  for (double x : xs)
    if (x >= 0.0 && x <= 1.0) bp.emplace_back(x, rx(x));
  return BoundarySpec(std::move(bp));
}

Motif motif_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::toupper(c));
  if (s == "K2") return Motif::K2;
  if (s == "P3") return Motif::P3;
  if (s == "K3") return Motif::K3;
  if (s == "C4") return Motif::C4;
  if (s == "P4") return Motif::P4;
  throw InputError("unknown motif: " + name + " (want K2, P3, K3, C4, P4)");
}

int motif_size(Motif f) {
  switch (f) {
    case Motif::K2:
      return 2;
    case Motif::P3:
    case Motif::K3:
      return 3;
    default:
      return 4;
  }
}

namespace {

// entries of A^p as exact integers (walk counts stay well inside int64 for
// the sizes this runs at)
std::vector<long long> adj_power(const Graph& g, int p) {
  int n = g.n();
  std::vector<long long> a((size_t)n * n, 0), r((size_t)n * n, 0);
  for (auto& [u, v] : g.edges()) {
    a[(size_t)u * n + v] = 1;
    a[(size_t)v * n + u] = 1;
  }
  r = a;
  for (int step = 1; step < p; ++step) {
    std::vector<long long> nr((size_t)n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long aik = r[(size_t)i * n + k];
        if (!aik) continue;
        const long long* arow = &a[(size_t)k * n];
        long long* nrow = &nr[(size_t)i * n];
        for (int j = 0; j < n; ++j) nrow[j] += aik * arow[j];
      }
    r = std::move(nr);
  }
  return r;
}

long long grand_sum(const std::vector<long long>& m) {
  long long s = 0;
  for (long long v : m) s += v;
  return s;
}

long long trace(const std::vector<long long>& m, int n) {
  long long s = 0;
  for (int i = 0; i < n; ++i) s += m[(size_t)i * n + i];
  return s;
}

__int128 ipow(long long b, int e) {
  __int128 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rat hom_density_graph(Motif f, const Graph& g) {
  int n = g.n();
  if (n == 0) throw InputError("hom_density_graph: empty graph");
  switch (f) {
    case Motif::K2:
      return Rat::from128(grand_sum(adj_power(g, 1)), ipow(n, 2));
    case Motif::P3:
      return Rat::from128(grand_sum(adj_power(g, 2)), ipow(n, 3));
    case Motif::K3:
      return Rat::from128(trace(adj_power(g, 3), n), ipow(n, 3));
    case Motif::C4:
      return Rat::from128(trace(adj_power(g, 4), n), ipow(n, 4));
    case Motif::P4:
      return Rat::from128(grand_sum(adj_power(g, 3)), ipow(n, 4));
  }
  throw InputError("hom_density_graph: unhandled motif");
}

double hom_density_graphon(Motif f, const StepGraphon& w) {
  int n = w.n();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = w.value(i, j) / n;
  switch (f) {
    case Motif::K2:
      return Eigen::VectorXd::Ones(n).dot(m * Eigen::VectorXd::Ones(n)) / n;
    case Motif::P3:
      return Eigen::VectorXd::Ones(n).dot(m * m * Eigen::VectorXd::Ones(n)) /
             n;
    case Motif::K3:
      return (m * m * m).trace();
    case Motif::C4:
      return (m * m * m * m).trace();
    case Motif::P4:
      return Eigen::VectorXd::Ones(n).dot(m * m * m *
                                          Eigen::VectorXd::Ones(n)) /
             n;
  }
  throw InputError("hom_density_graphon: unhandled motif");
}

}  // namespace linembed
