#include "linembed/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "linembed/errors.hpp"
#include "linembed/gamma.hpp"
#include "linembed/io.hpp"
#include "linembed/rng.hpp"
#include "linembed/sampler.hpp"
#include "linembed/seriation.hpp"

namespace linembed {

namespace {

const std::set<std::string> kOrderingNames = {"latent", "fiedler", "lbfs",
                                              "random"};

const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "heuristic";
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("experiment config: expected an object");

  ExperimentConfig cfg;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const nlohmann::json& v = it.value();
      if (key == "source") {
        cfg.source = v.get<std::string>();
      } else if (key == "sizes") {
        cfg.sizes = v.get<std::vector<int>>();
      } else if (key == "seeds_per_size") {
        cfg.seeds_per_size = v.get<int>();
      } else if (key == "orderings") {
        cfg.orderings = v.get<std::vector<std::string>>();
      } else if (key == "output") {
        cfg.output = v.get<std::string>();
      } else if (key == "mode") {
        std::string m = v.get<std::string>();
        if (m == "exact")
          cfg.mode = Mode::exact;
        else if (m == "heuristic")
          cfg.mode = Mode::heuristic;
        else
          throw InputError("experiment config: mode must be exact or heuristic");
      } else if (key == "restarts") {
        cfg.restarts = v.get<int>();
      } else if (key == "blocks") {
        cfg.blocks = v.get<int>();
      } else if (key == "base_seed") {
        cfg.base_seed = v.get<uint64_t>();
      } else if (key == "timing") {
        cfg.timing = v.get<bool>();
      } else {
        throw InputError("experiment config: unknown key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (source.empty()) throw InputError("experiment config: source is required");
  if (sizes.empty()) throw InputError("experiment config: sizes is empty");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InputError("experiment config: sizes must be >= 1");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw InputError("experiment config: sizes must be strictly increasing");
  }
  if (seeds_per_size < 1)
    throw InputError("experiment config: seeds_per_size must be >= 1");
  if (orderings.empty())
    throw InputError("experiment config: orderings is empty");
  std::set<std::string> seen;
  for (const auto& name : orderings) {
    if (!kOrderingNames.count(name))
      throw InputError("experiment config: unknown ordering \"" + name +
                       "\" (expected latent, fiedler, lbfs, or random)");
    if (!seen.insert(name).second)
      throw InputError("experiment config: duplicate ordering \"" + name + "\"");
  }
  if (restarts < 1) throw InputError("experiment config: restarts must be >= 1");
  if (blocks < 1) throw InputError("experiment config: blocks must be >= 1");
}

int thread_budget() {
  const char* s = std::getenv("LINEMBED_THREADS");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) return 1;
  if (v > 256) v = 256;
  return static_cast<int>(v);
}

namespace {

StepGraphon load_experiment_source(const ExperimentConfig& cfg) {
  std::string text = read_file(cfg.source);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("experiment source " + cfg.source + ": " + e.what());
  }
  if (j.is_object() && j.contains("breakpoints"))
    return parse_boundary_json(text).to_step_graphon(cfg.blocks);
  if (j.is_object() && j.contains("values"))
    return parse_step_graphon_json(text);
  throw InputError("experiment source " + cfg.source +
                   ": expected a step-graphon (\"values\") or boundary "
                   "(\"breakpoints\") JSON object");
}

struct Row {
  int n;
  int seed;
  std::string ordering;
  std::string text;  // full CSV line
};

}  // namespace

std::string run_converge(const ExperimentConfig& cfg) {
  cfg.validate();
  StepGraphon w = load_experiment_source(cfg);

  struct Cell {
    int n;
    int seed_idx;
  };
  std::vector<Cell> cells;
  for (int n : cfg.sizes)
    for (int s = 0; s < cfg.seeds_per_size; ++s) cells.push_back({n, s});

  std::vector<std::vector<Row>> slots(cells.size());

  auto run_cell = [&](size_t ci) {
    const Cell& cell = cells[ci];
    uint64_t cell_seed = mix_seed(cfg.base_seed, (uint64_t)cell.n,
                                  (uint64_t)cell.seed_idx);
    std::vector<Row>& out = slots[ci];
    std::optional<SampleRecord> rec;
    std::string sample_error;
    try {
      rec = sample_w_random(w, cell.n, cell_seed);
    } catch (const std::exception& e) {
      sample_error = e.what();
    }
    for (const auto& name : cfg.orderings) {
      std::string value = "nan";
      std::string status = "ok";
      long long ms = 0;
      if (!rec.has_value()) {
        status = "error";
      } else {
        try {
          auto t0 = std::chrono::steady_clock::now();
          Ordering ord;
          if (name == "latent")
            ord = rec->latent_order;
          else if (name == "fiedler")
            ord = fiedler_order(rec->graph);
          else if (name == "lbfs")
            ord = lbfs_order(rec->graph, {});
          else
            ord = random_order(rec->graph, cell_seed);
          GammaStarReport rep =
              gamma_star_order(rec->graph, ord, cfg.mode, cell_seed,
                               cfg.restarts);
          value = format_double(rep.value.to_double());
          if (cfg.timing) {
            auto t1 = std::chrono::steady_clock::now();
            ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count();
          }
        } catch (const std::exception& e) {
          value = "nan";
          status = "error";
        }
      }
      Row r;
      r.n = cell.n;
      r.seed = cell.seed_idx;
      r.ordering = name;
      r.text = std::to_string(cell.n) + "," + std::to_string(cell.seed_idx) +
               "," + name + "," + value + "," + mode_name(cfg.mode) + "," +
               std::to_string(ms) + "," + status;
      out.push_back(std::move(r));
    }
  };

  int threads = thread_budget();
  if (threads > 1 && cells.size() > 1) {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t ci = next.fetch_add(1);
        if (ci >= cells.size()) return;
        run_cell(ci);
      }
    };
    size_t nt = std::min<size_t>((size_t)threads, cells.size());
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (size_t ci = 0; ci < cells.size(); ++ci) run_cell(ci);
  }

  std::vector<Row> rows;
  for (auto& slot : slots)
    for (auto& r : slot) rows.push_back(std::move(r));
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.n, a.seed, a.ordering) < std::tie(b.n, b.seed, b.ordering);
  });

  std::string csv = "n,seed,ordering,gamma_star,mode,elapsed_ms,status\n";
  for (const auto& r : rows) {
    csv += r.text;
    csv += '\n';
  }
  if (!cfg.output.empty()) write_file(cfg.output, csv);
  return csv;
}

}  // namespace linembed
