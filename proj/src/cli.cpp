#include "linembed/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linembed/cutmetric.hpp"
#include "linembed/errors.hpp"
#include "linembed/experiment.hpp"
#include "linembed/gamma.hpp"
#include "linembed/geometric.hpp"
#include "linembed/io.hpp"
#include "linembed/sampler.hpp"
#include "linembed/uniform_embed.hpp"

namespace linembed {

namespace {

using Json = nlohmann::ordered_json;

const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "heuristic";
}

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "heuristic") return Mode::heuristic;
  throw InputError("--mode must be exact or heuristic");
}

CutMode to_cut_mode(Mode m) {
  return m == Mode::exact ? CutMode::exact : CutMode::heuristic;
}

Ordering parse_order_flag(const std::string& s, int n) {
  std::vector<int> perm;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace((unsigned char)tok[used])) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      perm.push_back(v);
    } catch (const std::exception&) {
      throw InputError("--order: bad vertex id \"" + tok + "\"");
    }
  }
  if ((int)perm.size() != n)
    throw InputError("--order lists " + std::to_string(perm.size()) +
                     " vertices, graph has " + std::to_string(n));
  return Ordering::from_perm(perm);
}

Json subset_json(const SubsetMask& a) { return Json(a.members()); }

Json coords_json(const std::vector<double>& coord) {
  Json j = Json::object();
  for (size_t v = 0; v < coord.size(); ++v)
    j[std::to_string(v)] = coord[v];
  return j;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Flat one-row CSV of scalar report fields.
void emit_kv_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string header, row;
  for (size_t i = 0; i < kv.size(); ++i) {
    if (i) {
      header += ',';
      row += ',';
    }
    header += kv[i].first;
    row += kv[i].second;
  }
  std::cout << header << "\n" << row << "\n";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Auto-detect a step-graphon source: "values" JSON directly, "breakpoints"
// JSON discretized to `blocks` blocks.
StepGraphon load_graphon_arg(const std::string& path, int blocks) {
  std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("breakpoints"))
    return parse_boundary_json(text).to_step_graphon(blocks);
  if (j.is_object() && j.contains("values")) return parse_step_graphon_json(text);
  throw InputError(path +
                   ": expected a step-graphon (\"values\") or boundary "
                   "(\"breakpoints\") JSON object");
}

const char* case_name(EmbedCase c) {
  switch (c) {
    case EmbedCase::unbounded_right: return "unbounded_right";
    case EmbedCase::unbounded_left: return "unbounded_left";
    case EmbedCase::interior_point: return "interior_point";
    case EmbedCase::two_sided: return "two_sided";
    default: return "none";
  }
}

struct RecognizeArgs {
  std::string path;
  std::string mode = "heuristic";
  uint64_t seed = 0;
  bool csv = false;
};

int cmd_recognize(const RecognizeArgs& a) {
  Graph g = load_graph(a.path);
  Mode mode = parse_mode(a.mode);
  OrderingSearch s = find_geometric_ordering(g, mode, a.seed);
  bool conclusive = s.found || s.exhaustive;

  Json j;
  j["n"] = g.n();
  j["edges"] = g.edge_count();
  j["mode"] = mode_name(mode);
  if (s.found)
    j["geometric"] = true;
  else if (s.exhaustive)
    j["geometric"] = false;
  else
    j["geometric"] = nullptr;
  j["conclusive"] = conclusive;
  j["message"] = s.found ? "one-dimensional geometric"
                         : (s.exhaustive ? "not one-dimensional geometric"
                                         : "inconclusive (heuristic search "
                                           "found no geometric ordering)");
  if (s.found) {
    j["ordering"] = s.order->perm;
    LineEmbedding emb = construct_line_embedding(g, *s.order);
    j["coords"] = coords_json(emb.coord);
  } else {
    GeometricCheck c = check_geometric_condition(g, Ordering::identity(g.n()));
    if (c.witness.has_value())
      j["witness"] = {{"v", c.witness->v}, {"z", c.witness->z},
                      {"w", c.witness->w}};
  }
  if (a.csv) {
    emit_kv_csv({{"n", std::to_string(g.n())},
                 {"edges", std::to_string(g.edge_count())},
                 {"mode", mode_name(mode)},
                 {"geometric", s.found ? "true" : (s.exhaustive ? "false" : "")},
                 {"conclusive", bool_str(conclusive)}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct GammaStarArgs {
  std::string path;
  std::string order;
  std::string mode = "heuristic";
  uint64_t seed = 0;
  int restarts = 16;
  bool csv = false;
};

int cmd_gamma_star(const GammaStarArgs& a) {
  Graph g = load_graph(a.path);
  Mode mode = parse_mode(a.mode);
  GammaStarReport rep;
  if (!a.order.empty()) {
    Ordering ord = parse_order_flag(a.order, g.n());
    rep = gamma_star_order(g, ord, mode, a.seed, a.restarts);
  } else {
    rep = gamma_star(g, mode, a.seed, a.restarts);
  }
  Json j;
  j["value"] = rep.value.to_double();
  j["value_rational"] = rep.value.str();
  j["ordering"] = rep.order.perm;
  j["subset"] = subset_json(rep.subset);
  j["mode"] = mode_name(rep.mode);
  j["exhaustive"] = rep.exhaustive;
  j["restarts_used"] = rep.restarts_used;
  if (a.csv) {
    emit_kv_csv({{"value", format_double(rep.value.to_double())},
                 {"value_rational", rep.value.str()},
                 {"mode", mode_name(rep.mode)},
                 {"exhaustive", bool_str(rep.exhaustive)},
                 {"restarts_used", std::to_string(rep.restarts_used)}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct GammaArgs {
  std::string path;
  std::string mode = "heuristic";
  uint64_t seed = 0;
  int restarts = 16;
  int blocks = 8;
  bool csv = false;
};

int cmd_gamma(const GammaArgs& a) {
  StepGraphon w = load_graphon_arg(a.path, a.blocks);
  Mode mode = parse_mode(a.mode);
  GammaReport rep = gamma(w, mode, a.seed, a.restarts);
  Json j;
  j["estimate"] = rep.estimate;
  j["lower"] = rep.lower;
  j["upper"] = rep.upper;
  if (rep.exact.has_value()) {
    j["exact"] = rep.exact->str();
    j["exact_decimal"] = rep.exact->to_double();
  } else {
    j["exact"] = nullptr;
  }
  j["subset"] = subset_json(rep.subset);
  j["mode"] = mode_name(rep.mode);
  j["exhaustive"] = rep.exhaustive;
  j["bound_c"] = rep.bound_c;
  j["blocks"] = w.n();
  if (a.csv) {
    emit_kv_csv({{"estimate", format_double(rep.estimate)},
                 {"lower", format_double(rep.lower)},
                 {"upper", format_double(rep.upper)},
                 {"exact", rep.exact ? rep.exact->str() : ""},
                 {"mode", mode_name(rep.mode)},
                 {"exhaustive", bool_str(rep.exhaustive)}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct CutNormArgs {
  std::string path;
  std::string mode = "heuristic";
  uint64_t seed = 0;
  int restarts = 16;
  int blocks = 8;
  bool csv = false;
};

int cmd_cutnorm(const CutNormArgs& a) {
  StepGraphon w = load_graphon_arg(a.path, a.blocks);
  CutMode mode = to_cut_mode(parse_mode(a.mode));
  CutNormReport rep = cut_norm(w, mode, a.seed, a.restarts);
  Json j;
  j["value"] = rep.value;
  j["S"] = subset_json(rep.S);
  j["T"] = subset_json(rep.T);
  j["mode"] = a.mode;
  j["exact"] = rep.exact;
  if (a.csv) {
    emit_kv_csv({{"value", format_double(rep.value)},
                 {"mode", a.mode},
                 {"exact", bool_str(rep.exact)}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct CutDistArgs {
  std::string path1, path2;
  std::string mode = "heuristic";
  uint64_t seed = 0;
  int restarts = 16;
  int blocks = 8;
  bool csv = false;
};

int cmd_cutdist(const CutDistArgs& a) {
  StepGraphon w1 = load_graphon_arg(a.path1, a.blocks);
  StepGraphon w2 = load_graphon_arg(a.path2, a.blocks);
  CutMode mode = to_cut_mode(parse_mode(a.mode));
  CutDistanceReport rep = cut_distance_blocks(w1, w2, mode, a.seed, a.restarts);
  Json j;
  j["value"] = rep.value;
  j["perm"] = rep.perm;
  j["refined_blocks"] = rep.refined_blocks;
  j["mode"] = a.mode;
  j["exact"] = rep.exact;
  j["upper_bound_only"] = rep.upper_bound_only;
  if (a.csv) {
    emit_kv_csv({{"value", format_double(rep.value)},
                 {"refined_blocks", std::to_string(rep.refined_blocks)},
                 {"mode", a.mode},
                 {"exact", bool_str(rep.exact)}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct SampleArgs {
  std::string path;
  int n = 0;
  uint64_t seed = 0;
  bool cdf = false;
  int blocks = 8;  // unused for sampling; kept for symmetry
  bool csv = false;
};

int cmd_sample(const SampleArgs& a) {
  if (a.n < 1) throw InputError("--size must be >= 1");
  std::string text = read_file(a.path);
  Json spec;
  try {
    spec = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(a.path + ": " + e.what());
  }
  SampleRecord rec;
  if (a.cdf) {
    if (!spec.is_object() || !spec.contains("breakpoints"))
      throw InputError(a.path + ": cdf JSON needs a \"breakpoints\" array");
    rec = sample_geometric_cdf(parse_cdf_json(text), a.n, a.seed);
  } else if (spec.is_object() && spec.contains("breakpoints")) {
    rec = sample_w_random(parse_boundary_json(text), a.n, a.seed);
  } else if (spec.is_object() && spec.contains("values")) {
    rec = sample_w_random(parse_step_graphon_json(text), a.n, a.seed);
  } else {
    throw InputError(a.path +
                     ": expected step-graphon, boundary, or cdf JSON");
  }
  if (a.csv) {
    std::cout << "u,v\n";
    for (const auto& e : rec.graph.edges())
      std::cout << e.first << "," << e.second << "\n";
    return 0;
  }
  Json j;
  j["n"] = rec.graph.n();
  Json edges = Json::array();
  for (const auto& e : rec.graph.edges())
    edges.push_back(Json::array({e.first, e.second}));
  j["edges"] = edges;
  j["latents"] = rec.latents;
  j["latent_order"] = rec.latent_order.perm;
  j["seed"] = rec.seed;
  j["source"] = rec.source;
  emit_json(j);
  return 0;
}

struct HomArgs {
  std::string path;
  std::string motif = "K2";
  int blocks = 8;
  bool csv = false;
};

int cmd_homdensity(const HomArgs& a) {
  Motif f = motif_from_name(a.motif);
  std::string text = read_file(a.path);
  bool is_graphon = false;
  {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (text[i] == '{' || text[i] == '[')) {
      try {
        Json j = Json::parse(text);
        is_graphon = j.is_object() &&
                     (j.contains("values") || j.contains("breakpoints"));
      } catch (const nlohmann::json::exception&) {
        is_graphon = false;
      }
    }
  }
  Json j;
  j["motif"] = a.motif;
  std::string csv_value, csv_rational;
  if (is_graphon) {
    StepGraphon w = load_graphon_arg(a.path, a.blocks);
    double t = hom_density_graphon(f, w);
    j["density"] = t;
    j["input"] = "graphon";
    csv_value = format_double(t);
  } else {
    Graph g = load_graph(a.path);
    Rat t = hom_density_graph(f, g);
    j["density"] = t.to_double();
    j["density_rational"] = t.str();
    j["input"] = "graph";
    csv_value = format_double(t.to_double());
    csv_rational = t.str();
  }
  if (a.csv) {
    emit_kv_csv({{"motif", a.motif},
                 {"density", csv_value},
                 {"density_rational", csv_rational}});
  } else {
    emit_json(j);
  }
  return 0;
}

struct EmbedGeomArgs {
  std::string path;
  std::string order;
  std::string mode = "heuristic";
  uint64_t seed = 0;
};

int cmd_embed_geometric(const EmbedGeomArgs& a) {
  Graph g = load_graph(a.path);
  Mode mode = parse_mode(a.mode);
  Ordering ord;
  if (!a.order.empty()) {
    ord = parse_order_flag(a.order, g.n());
  } else {
    OrderingSearch s = find_geometric_ordering(g, mode, a.seed);
    if (!s.found) {
      std::string witness;
      GeometricCheck c =
          check_geometric_condition(g, Ordering::identity(g.n()));
      if (c.witness.has_value())
        witness = "{\"v\":" + std::to_string(c.witness->v) +
                  ",\"z\":" + std::to_string(c.witness->z) +
                  ",\"w\":" + std::to_string(c.witness->w) + "}";
      throw PreconditionError(
          s.exhaustive ? "no geometric ordering exists"
                       : "no geometric ordering found (heuristic search "
                         "inconclusive)",
          witness);
    }
    ord = *s.order;
  }
  LineEmbedding emb = construct_line_embedding(g, ord);
  Json j;
  j["ordering"] = ord.perm;
  j["coords"] = coords_json(emb.coord);
  j["realizes"] = embedding_realizes(g, emb);
  emit_json(j);
  return 0;
}

struct EmbedUniformArgs {
  std::string path;
  int grid = 400;
  double delta = 1e-6;
  bool csv = false;
};

Json fps_json(const FixedPointSets& fps) {
  Json j;
  j["L"] = fps.L;
  j["R"] = fps.R;
  return j;
}

Json refutation_json(const RefutationWitness& rw) {
  Json j;
  j["uncountable"] = rw.uncountable;
  Json pts = Json::array();
  for (const auto& p : rw.points) {
    Json pj;
    pj["z"] = p.z;
    pj["side"] = std::string(1, p.side);
    pj["sequence"] = p.sequence;
    pts.push_back(pj);
  }
  j["blocked_points"] = pts;
  j["argument"] = rw.argument;
  return j;
}

int cmd_embed_uniform(const EmbedUniformArgs& a) {
  BoundarySpec b = load_boundary(a.path);
  UniformDecision dec = decide_uniform_embedding(b);

  Json j;
  j["exists"] = dec.exists;
  j["case"] = case_name(dec.case_tag);
  j["increasing_available"] = dec.increasing_available;
  j["bounded"] = dec.bounded;
  j["fixed_points"] = fps_json(dec.fps);
  j["reason"] = dec.reason;

  if (!dec.exists) {
    RefutationWitness rw = refute_embedding_witness(b);
    j["refutation"] = refutation_json(rw);
    emit_json(j);
    std::cerr << "error: no uniform linear embedding: " << dec.reason << "\n";
    return 3;
  }

  UniformEmbedding emb = build_embedding(b);
  Json ej;
  ej["case"] = case_name(emb.tag);
  ej["increasing"] = emb.increasing;
  ej["bounded"] = emb.bounded;
  auto anchors_with_values = [&](const std::vector<double>& xs) {
    Json arr = Json::array();
    for (double x : xs) {
      std::optional<double> v = emb.eval(x);
      Json row;
      row["x"] = x;
      if (v.has_value())
        row["pi"] = *v;
      else
        row["pi"] = nullptr;
      arr.push_back(row);
    }
    return arr;
  };
  ej["up_anchors"] = anchors_with_values(emb.up_anchors());
  ej["down_anchors"] = anchors_with_values(emb.down_anchors());
  ej["up_truncated"] = emb.up_truncated();
  ej["down_truncated"] = emb.down_truncated();
  if (emb.interior_fixed_point().has_value())
    ej["interior_fixed_point"] = *emb.interior_fixed_point();
  j["embedding"] = ej;

  VerifyReport vr = verify_embedding(
      b, [&](double x) { return emb.eval(x); }, a.grid, a.delta);
  Json vj;
  vj["grid"] = vr.grid;
  vj["checked_pairs"] = vr.checked_pairs;
  vj["skipped_pairs"] = vr.skipped_pairs;
  vj["violations"] = vr.violations;
  vj["ok"] = vr.ok;
  if (!vr.first_violation.empty()) vj["first_violation"] = vr.first_violation;
  j["verification"] = vj;

  if (a.csv) {
    std::cout << "side,index,x,pi\n";
    const auto& up = emb.up_anchors();
    for (size_t i = 0; i < up.size(); ++i) {
      std::optional<double> v = emb.eval(up[i]);
      std::cout << "up," << i << "," << format_double(up[i]) << ","
                << (v ? format_double(*v) : "") << "\n";
    }
    const auto& dn = emb.down_anchors();
    for (size_t i = 0; i < dn.size(); ++i) {
      std::optional<double> v = emb.eval(dn[i]);
      std::cout << "down," << i << "," << format_double(dn[i]) << ","
                << (v ? format_double(*v) : "") << "\n";
    }
  } else {
    emit_json(j);
  }
  return vr.ok ? 0 : 3;
}

int cmd_converge(const std::string& config_path) {
  ExperimentConfig cfg = ExperimentConfig::from_json(read_file(config_path));
  std::string csv = run_converge(cfg);
  std::cout << csv;
  return 0;
}

void print_error(const std::string& kind, const std::string& msg,
                 const std::string& witness) {
  std::cerr << "error (" << kind << "): " << msg << "\n";
  if (!witness.empty()) {
    Json j;
    j["error"] = msg;
    try {
      j["witness"] = Json::parse(witness);
    } catch (const nlohmann::json::exception&) {
      j["witness"] = witness;
    }
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"linear embeddings of graphs and graphons on the real line"};
  app.require_subcommand(1);

  RecognizeArgs rec;
  CLI::App* s_rec = app.add_subcommand(
      "recognize", "decide whether a graph is one-dimensional geometric");
  s_rec->add_option("graph", rec.path, "graph file (text or JSON)")
      ->required();
  s_rec->add_option("--mode", rec.mode, "exact|heuristic")
      ->default_val("heuristic");
  s_rec->add_option("--seed", rec.seed, "rng seed")->default_val(0);
  bool rec_json = false;
  s_rec->add_flag("--json", rec_json, "JSON output (default)");
  s_rec->add_flag("--csv", rec.csv, "CSV output");

  GammaStarArgs gs;
  CLI::App* s_gs = app.add_subcommand(
      "gamma-star", "gamma-star of a graph (min over orderings, or --order)");
  s_gs->add_option("graph", gs.path, "graph file")->required();
  s_gs->add_option("--order", gs.order,
                   "comma-separated vertex order (fixes the ordering)");
  s_gs->add_option("--mode", gs.mode, "exact|heuristic")
      ->default_val("heuristic");
  s_gs->add_option("--seed", gs.seed, "rng seed")->default_val(0);
  s_gs->add_option("--restarts", gs.restarts, "heuristic restarts")
      ->default_val(16);
  bool gs_json = false;
  s_gs->add_flag("--json", gs_json, "JSON output (default)");
  s_gs->add_flag("--csv", gs.csv, "CSV output");

  GammaArgs ga;
  CLI::App* s_ga = app.add_subcommand(
      "gamma", "gamma of a step graphon (certified band)");
  s_ga->add_option("graphon", ga.path, "step-graphon or boundary JSON")
      ->required();
  s_ga->add_option("--mode", ga.mode, "exact|heuristic")
      ->default_val("heuristic");
  s_ga->add_option("--seed", ga.seed, "rng seed")->default_val(0);
  s_ga->add_option("--restarts", ga.restarts, "heuristic restarts")
      ->default_val(16);
  s_ga->add_option("--blocks", ga.blocks,
                   "discretization blocks for boundary input")
      ->default_val(8);
  bool ga_json = false;
  s_ga->add_flag("--json", ga_json, "JSON output (default)");
  s_ga->add_flag("--csv", ga.csv, "CSV output");

  CutNormArgs cn;
  CLI::App* s_cn =
      app.add_subcommand("cutnorm", "cut norm of a step graphon");
  s_cn->add_option("graphon", cn.path, "step-graphon or boundary JSON")
      ->required();
  s_cn->add_option("--mode", cn.mode, "exact|heuristic")
      ->default_val("heuristic");
  s_cn->add_option("--seed", cn.seed, "rng seed")->default_val(0);
  s_cn->add_option("--restarts", cn.restarts, "heuristic restarts")
      ->default_val(16);
  s_cn->add_option("--blocks", cn.blocks,
                   "discretization blocks for boundary input")
      ->default_val(8);
  bool cn_json = false;
  s_cn->add_flag("--json", cn_json, "JSON output (default)");
  s_cn->add_flag("--csv", cn.csv, "CSV output");

  CutDistArgs cd;
  CLI::App* s_cd = app.add_subcommand(
      "cutdist", "block cut distance between two step graphons");
  s_cd->add_option("graphon1", cd.path1, "first graphon")->required();
  s_cd->add_option("graphon2", cd.path2, "second graphon")->required();
  s_cd->add_option("--mode", cd.mode, "exact|heuristic")
      ->default_val("heuristic");
  s_cd->add_option("--seed", cd.seed, "rng seed")->default_val(0);
  s_cd->add_option("--restarts", cd.restarts, "heuristic restarts")
      ->default_val(16);
  s_cd->add_option("--blocks", cd.blocks,
                   "discretization blocks for boundary input")
      ->default_val(8);
  bool cd_json = false;
  s_cd->add_flag("--json", cd_json, "JSON output (default)");
  s_cd->add_flag("--csv", cd.csv, "CSV output");

  SampleArgs sa;
  CLI::App* s_sa = app.add_subcommand(
      "sample", "sample a w-random graph or a geometric cdf graph");
  s_sa->add_option("source", sa.path,
                   "step-graphon, boundary, or cdf JSON")
      ->required();
  s_sa->add_option("-n,--size", sa.n, "number of vertices")->required();
  s_sa->add_option("--seed", sa.seed, "rng seed")->default_val(0);
  s_sa->add_flag("--cdf", sa.cdf,
                 "interpret the source as a cdf (geometric model)");
  bool sa_json = false;
  s_sa->add_flag("--json", sa_json, "JSON output (default)");
  s_sa->add_flag("--csv", sa.csv, "CSV edge list");

  HomArgs ho;
  CLI::App* s_ho = app.add_subcommand(
      "homdensity", "homomorphism density of a small motif");
  s_ho->add_option("target", ho.path, "graph or graphon file")->required();
  s_ho->add_option("--motif", ho.motif, "K2|P3|K3|C4|P4")->default_val("K2");
  s_ho->add_option("--blocks", ho.blocks,
                   "discretization blocks for boundary input")
      ->default_val(8);
  bool ho_json = false;
  s_ho->add_flag("--json", ho_json, "JSON output (default)");
  s_ho->add_flag("--csv", ho.csv, "CSV output");

  EmbedGeomArgs eg;
  CLI::App* s_eg = app.add_subcommand(
      "embed-geometric", "construct a line embedding of a graph");
  s_eg->add_option("graph", eg.path, "graph file")->required();
  s_eg->add_option("--order", eg.order,
                   "comma-separated vertex order (skips the search)");
  s_eg->add_option("--mode", eg.mode, "exact|heuristic ordering search")
      ->default_val("heuristic");
  s_eg->add_option("--seed", eg.seed, "rng seed")->default_val(0);
  bool eg_json = false;
  s_eg->add_flag("--json", eg_json, "JSON output (default)");

  EmbedUniformArgs eu;
  CLI::App* s_eu = app.add_subcommand(
      "embed-uniform",
      "decide and construct the uniform linear embedding of a boundary");
  s_eu->add_option("boundary", eu.path, "boundary JSON")->required();
  s_eu->add_option("--grid", eu.grid, "verification grid")->default_val(400);
  s_eu->add_option("--delta", eu.delta, "verification margin")
      ->default_val(1e-6);
  bool eu_json = false;
  s_eu->add_flag("--json", eu_json, "JSON output (default)");
  s_eu->add_flag("--csv", eu.csv, "anchor table as CSV");

  std::string cv_config;
  CLI::App* s_cv = app.add_subcommand(
      "converge", "gamma-star convergence experiment (CSV)");
  s_cv->add_option("config", cv_config, "experiment config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 1;
  }

  try {
    if (*s_rec) return cmd_recognize(rec);
    if (*s_gs) return cmd_gamma_star(gs);
    if (*s_ga) return cmd_gamma(ga);
    if (*s_cn) return cmd_cutnorm(cn);
    if (*s_cd) return cmd_cutdist(cd);
    if (*s_sa) return cmd_sample(sa);
    if (*s_ho) return cmd_homdensity(ho);
    if (*s_eg) return cmd_embed_geometric(eg);
    if (*s_eu) return cmd_embed_uniform(eu);
    if (*s_cv) return cmd_converge(cv_config);
  } catch (const InputError& e) {
    print_error("input", e.what(), "");
    return 1;
  } catch (const CostGuardError& e) {
    print_error("cost guard", e.what(), "");
    return 2;
  } catch (const PreconditionError& e) {
    print_error("precondition", e.what(), e.witness_json);
    return 3;
  } catch (const nlohmann::json::exception& e) {
    print_error("input", e.what(), "");
    return 1;
  } catch (const std::exception& e) {
    print_error("input", e.what(), "");
    return 1;
  }
  return 0;
}

}  // namespace linembed
