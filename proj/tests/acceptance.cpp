// Acceptance suite: one line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linembed/boundary.hpp"
#include "linembed/cutmetric.hpp"
#include "linembed/errors.hpp"
#include "linembed/experiment.hpp"
#include "linembed/gamma.hpp"
#include "linembed/geometric.hpp"
#include "linembed/graph.hpp"
#include "linembed/io.hpp"
#include "linembed/rational.hpp"
#include "linembed/rng.hpp"
#include "linembed/sampler.hpp"
#include "linembed/seriation.hpp"
#include "linembed/step_graphon.hpp"
#include "linembed/subset.hpp"
#include "linembed/uniform_embed.hpp"
#include "oracles.hpp"

using namespace linembed;

namespace {

struct CheckFail {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFail{what};
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
  return Graph(n, es);
}

// the eleven isomorphism classes of simple graphs on four vertices
std::vector<Graph> four_vertex_classes() {
  std::vector<Graph> out;
  out.push_back(from_edges(4, {}));
  out.push_back(from_edges(4, {{0, 1}}));
  out.push_back(from_edges(4, {{0, 1}, {2, 3}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}, {0, 2}}));
  out.push_back(from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  out.push_back(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}));
  out.push_back(
      from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  return out;
}

QuantizedGraphon corner_graphon() {
  QuantizedGraphon q;
  q.n = 3;
  q.scale = 1;
  q.q = {0, 0, 1, 0, 0, 0, 1, 0, 0};
  return q;
}

BoundarySpec example_boundary() {
  return BoundarySpec({{0.0, 0.25}, {0.5, 0.5}, {0.75, 1.0}, {1.0, 1.0}});
}

BoundarySpec shift_boundary() {
  return BoundarySpec({{0.0, 0.5}, {0.5, 1.0}, {1.0, 1.0}});
}

BoundarySpec three_fixed_boundary() {
  return BoundarySpec({{0.0, 0.1},
                       {0.25, 0.25},
                       {0.375, 0.45},
                       {0.5, 0.5},
                       {0.625, 0.7},
                       {0.75, 0.75},
                       {0.875, 1.0},
                       {1.0, 1.0}});
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t m = v.size() / 2;
  if (v.size() % 2) return v[m];
  return 0.5 * (v[m - 1] + v[m]);
}

// gamma_star column of a converge CSV, keyed by size; rows must be ok
std::vector<double> csv_column(const std::string& csv, int size) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    expect(f.size() == 7, "converge row has 7 fields");
    expect(f[6] == "ok", "converge row status ok");
    if (std::stoi(f[0]) == size) out.push_back(std::stod(f[3]));
  }
  return out;
}

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / "linembed_acceptance";
  std::filesystem::create_directories(d);
  return d;
}

std::string converge_di_csv() {
  auto src = scratch_dir() / "example_boundary.json";
  write_file(src.string(),
             boundary_to_json(example_boundary()) + "\n");
  ExperimentConfig cfg;
  cfg.source = src.string();
  cfg.sizes = {20, 40, 80, 160};
  cfg.seeds_per_size = 20;
  cfg.orderings = {"latent"};
  cfg.mode = Mode::heuristic;
  cfg.restarts = 16;
  cfg.blocks = 8;
  cfg.base_seed = 0;
  cfg.timing = false;
  return run_converge(cfg);
}

std::string converge_corner_csv() {
  auto src = scratch_dir() / "corner.json";
  write_file(src.string(),
             step_graphon_to_json(corner_graphon().to_step()) + "\n");
  ExperimentConfig cfg;
  cfg.source = src.string();
  cfg.sizes = {160};
  cfg.seeds_per_size = 20;
  cfg.orderings = {"latent"};
  cfg.mode = Mode::heuristic;
  cfg.restarts = 16;
  cfg.blocks = 8;
  cfg.base_seed = 0;
  cfg.timing = false;
  return run_converge(cfg);
}

struct SamplerStats {
  std::string csv;
  double mean2 = 0, sd2 = 0, mean3 = 0, sd3 = 0;
};

SamplerStats sampler_stats() {
  StepGraphon half(1, {0.5});
  SamplerStats st;
  std::vector<double> t2, t3;
  std::ostringstream csv;
  csv << "seed,t_k2,t_k3\n";
  for (uint64_t seed = 0; seed < 100; ++seed) {
    SampleRecord rec = sample_w_random(half, 200, seed);
    double a = hom_density_graph(Motif::K2, rec.graph).to_double();
    double b = hom_density_graph(Motif::K3, rec.graph).to_double();
    t2.push_back(a);
    t3.push_back(b);
    csv << seed << ',' << format_double(a) << ',' << format_double(b) << '\n';
  }
  st.csv = csv.str();
  auto stats = [](const std::vector<double>& v, double& mean, double& sd) {
    double s = 0;
    for (double x : v) s += x;
    mean = s / v.size();
    double q = 0;
    for (double x : v) q += (x - mean) * (x - mean);
    sd = std::sqrt(q / (v.size() - 1));
  };
  stats(t2, st.mean2, st.sd2);
  stats(t3, st.mean3, st.sd3);
  return st;
}

// deterministic symmetric 4-block graphon with values in [0,1]
StepGraphon random_w0_block4(uint64_t seed, uint64_t tag) {
  Rng rng(mix_seed(seed, tag));
  std::vector<double> vals(16, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double v = rng.uniform01();
      vals[(size_t)i * 4 + j] = v;
      vals[(size_t)j * 4 + i] = v;
    }
  return StepGraphon(4, vals);
}

StepGraphon scaled_to_cutnorm(const StepGraphon& w, double target) {
  double norm = cut_norm(w, CutMode::exact).value;
  if (norm <= target) return w;
  double f = target / norm;
  std::vector<double> vals = w.values();
  for (double& v : vals) v *= f;
  return StepGraphon(w.n(), vals);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // <= 0: no pinned budget
    std::function<void()> run;
  };

  // shared across criteria 7/9/10
  std::string di_csv, corner_csv;
  SamplerStats stats9;

  std::vector<Criterion> crits;

  crits.push_back({1, "zero characterization on graphs", 60, [] {
    std::vector<Graph> corpus = four_vertex_classes();
    for (uint64_t seed = 0; seed < 200; ++seed) {
      int n = 2 + (int)(seed % 6);
      Rng rng(mix_seed(seed, 0x41435031ULL));
      double p = 0.15 + 0.7 * rng.uniform01();
      corpus.push_back(oracles::random_graph(n, p, seed));
    }
    for (size_t k = 0; k < corpus.size(); ++k) {
      const Graph& g = corpus[k];
      GammaStarReport rep = gamma_star(g, Mode::exact);
      OrderingSearch srch = find_geometric_ordering(g, Mode::exact);
      expect(rep.exhaustive, "gamma-star search exhaustive");
      expect(srch.exhaustive, "ordering search exhaustive");
      bool zero = rep.value == Rat(0);
      expect(zero == srch.found,
             "graph " + std::to_string(k) + ": gamma-star zero iff ordering found");
      if (srch.found) {
        LineEmbedding emb = construct_line_embedding(g, *srch.order);
        expect(embedding_realizes(g, emb), "found ordering realizes the graph");
      }
    }
  }});

  crits.push_back({2, "zero characterization on step graphons", 60, [] {
    std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (uint64_t seed = 0; seed < 500; ++seed) {
      int n = 2 + (int)(seed % 5);
      StepGraphon w = oracles::random_step_graphon(n, grid, seed);
      GammaReport rep = gamma(w, Mode::exact);
      expect(rep.exact.has_value(), "exact mode yields a rational");
      bool zero = *rep.exact == Rat(0);
      expect(zero == diagonally_increasing_check(w),
             "seed " + std::to_string(seed) +
                 ": gamma zero iff diagonally increasing");
    }
  }});

  crits.push_back({3, "graph-graphon sandwich bounds", 120, [] {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      int n = 4 + (int)(seed % 9);
      Rng rng(mix_seed(seed, 0x41435033ULL));
      double p = 0.15 + 0.7 * rng.uniform01();
      Graph g = oracles::random_graph(n, p, seed);
      Ordering ord = random_order(g, seed);
      Rat gs = gamma_star_order(g, ord, Mode::exact).value;
      GammaReport rep = gamma(StepGraphon::from_graph(g, ord), Mode::exact);
      expect(rep.exact.has_value(), "exact mode yields a rational");
      Rat diff = gs - *rep.exact;
      if (diff < Rat(0)) diff = Rat(0) - diff;
      expect(!(Rat(2, n) < diff), "estimate within 2/n of gamma-star");
      // band is [estimate, estimate + 4/n] for a graph-induced graphon
      Rat lo_dev = diff;
      Rat hi = *rep.exact + Rat(4, n) - gs;
      if (hi < Rat(0)) hi = Rat(0) - hi;
      expect(!(Rat(6, n) < lo_dev) && !(Rat(6, n) < hi),
             "band endpoints within 6/n of gamma-star");
      double upper_expected = rep.estimate + 4.0 * rep.bound_c / n;
      expect(std::fabs(rep.upper - upper_expected) < 1e-12,
             "reported band width is 4c/n");
    }
  }});

  crits.push_back({4, "corner graphon subset optimum 2/27", 1, [] {
    QuantizedGraphon q = corner_graphon();
    Rat best(0);
    for (unsigned bits = 0; bits < 8; ++bits) {
      Rat v = g_w_exact(q, SubsetMask::from_bits(3, bits));
      if (best < v) best = v;
    }
    expect(best == Rat(2, 27), "library maximum is 2/27");
    expect(oracles::g_w_max(3, 1, q.q) == Rat(2, 27), "oracle maximum is 2/27");
  }});

  crits.push_back({5, "continuity bound under cut-norm", 120, [] {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      StepGraphon a =
          scaled_to_cutnorm(random_w0_block4(seed, 0x41435035ULL), 0.24);
      StepGraphon b =
          scaled_to_cutnorm(random_w0_block4(seed, 0x41435036ULL), 0.24);
      ContinuityReport r = continuity_check(a, b, CutMode::exact);
      expect(r.holds, "seed " + std::to_string(seed) + ": continuity holds");
      double rhs = 2 * r.cutnorm_diff + 2 * std::sqrt(r.cutnorm_diff);
      expect(std::fabs(r.rhs - rhs) < 1e-12, "rhs is 2d + 2 sqrt(d)");
    }
  }});

  crits.push_back({6, "diagonal-mask norm bound", 60, [] {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(mix_seed(seed, 0x41435037ULL));
      std::vector<double> vals(16, 0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          double v = -2.0 + 4.0 * rng.uniform01();
          vals[(size_t)i * 4 + j] = v;
          vals[(size_t)j * 4 + i] = v;
        }
      StepGraphon w = scaled_to_cutnorm(StepGraphon(4, vals), 0.49);
      ChiProductReport r = chi_product(w, CutMode::exact, seed);
      expect(r.preconditions_met, "inputs are in range for the masked-norm bound");
      expect(r.lower <= r.sqrt_bound + 1e-12,
             "seed " + std::to_string(seed) +
                 ": certified lower bound within 2 sqrt(cut norm)");
      expect(r.bound_holds, "report flags the bound as satisfied");
    }
  }});

  crits.push_back({7, "gamma-star convergence experiment", 600,
                   [&di_csv, &corner_csv] {
    di_csv = converge_di_csv();
    std::vector<double> med;
    for (int n : {20, 40, 80, 160}) {
      auto col = csv_column(di_csv, n);
      expect(col.size() == 20, "20 rows per size");
      med.push_back(median(col));
    }
    for (size_t i = 0; i + 1 < med.size(); ++i)
      expect(med[i + 1] < med[i], "medians strictly decrease with n");
    expect(med.back() < 0.005, "n=160 median below 0.005");

    corner_csv = converge_corner_csv();
    auto col = csv_column(corner_csv, 160);
    expect(col.size() == 20, "20 rows at n=160");
    GammaTildeReport tilde =
        gamma_tilde(corner_graphon().to_step(), Mode::exact);
    expect(tilde.exact.has_value() && *tilde.exact == Rat(1, 27),
           "exhaustive block-permutation estimate is 1/27");
    expect(median(col) > tilde.exact->to_double() / 2,
           "non-flattening median stays above half the permuted optimum");
  }});

  crits.push_back({8, "uniform embedding gate and construction", 60, [] {
    // (a) interior fixed point: closed-form map and constructed embedding
    BoundarySpec ex = example_boundary();
    UniformDecision d = decide_uniform_embedding(ex);
    expect(d.exists, "embedding exists");
    expect(d.case_tag == EmbedCase::interior_point, "interior-point case");
    expect(d.fps.L == std::vector<double>{0.5} &&
               d.fps.R == std::vector<double>{0.5},
           "L = R = {1/2} exactly");
    auto closed = [](double x) -> std::optional<double> {
      if (x == 0.5) return 0.0;
      if (x < 0.5) return std::log2(0.5 - x) - 1.0;
      return 1.0 - std::log2(x - 0.5);
    };
    expect(std::fabs(*closed(0.0) + 2.0) < 1e-12 &&
               std::fabs(*closed(1.0) - 2.0) < 1e-12 && *closed(0.5) == 0.0,
           "closed form hits -2, 0, 2 at 0, 1/2, 1");
    VerifyReport vc = verify_embedding(ex, closed, 400, 1e-6);
    expect(vc.violations == 0 && vc.ok, "closed form verifies on a 400 grid");
    UniformEmbedding emb = build_embedding(ex);
    VerifyReport vb = verify_embedding(
        ex, [&emb](double x) { return emb.eval(x); }, 400, 1e-6);
    expect(vb.violations == 0 && vb.ok, "constructed map verifies too");

    // (b) three interior fixed points: no embedding, >= 3 blocking sequences
    UniformDecision d3 = decide_uniform_embedding(three_fixed_boundary());
    expect(!d3.exists, "three fixed points block the embedding");
    RefutationWitness wit = refute_embedding_witness(three_fixed_boundary());
    expect(wit.points.size() >= 3, "at least three blocking sequences");
    for (const auto& p : wit.points)
      expect(p.sequence.size() >= 2, "each sequence has iterates");

    // (c) r = min(1, x + 1/2): bounded increasing embedding
    UniformDecision ds = decide_uniform_embedding(shift_boundary());
    expect(ds.exists && ds.bounded && ds.increasing_available,
           "bounded increasing case");
    expect(ds.case_tag == EmbedCase::unbounded_right,
           "no-fixed-point case tag");
    UniformEmbedding es = build_embedding(shift_boundary());
    VerifyReport vs = verify_embedding(
        shift_boundary(), [&es](double x) { return es.eval(x); }, 400, 1e-6);
    expect(vs.violations == 0 && vs.ok, "shift embedding verifies");
  }});

  crits.push_back({9, "sampler homomorphism statistics", 120, [&stats9] {
    stats9 = sampler_stats();
    expect(std::fabs(stats9.mean2 - 0.5) <= 4 * stats9.sd2,
           "edge density within 4 sample sigmas of 1/2");
    expect(std::fabs(stats9.mean3 - 0.125) <= 4 * stats9.sd3,
           "triangle density within 4 sample sigmas of 1/8");
    expect(stats9.csv.size() > 100, "csv emitted");
  }});

  crits.push_back({10, "byte-identical reruns", 0,
                   [&di_csv, &corner_csv, &stats9] {
    expect(!di_csv.empty() && !corner_csv.empty() && !stats9.csv.empty(),
           "criteria 7 and 9 ran first");
    expect(converge_di_csv() == di_csv, "convergence csv reproduces");
    expect(converge_corner_csv() == corner_csv, "corner csv reproduces");
    expect(sampler_stats().csv == stats9.csv, "sampler csv reproduces");
  }});

  int failed = 0;
  for (auto& c : crits) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const CheckFail& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      detail = "exceeded " + std::to_string((int)c.limit_s) + "s budget";
    }
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), secs, detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("acceptance: %d/%d criteria passed\n",
              (int)crits.size() - failed, (int)crits.size());
  return failed == 0 ? 0 : 1;
}
