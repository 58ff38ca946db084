#include "linembed/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "linembed/errors.hpp"

namespace linembed {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(std::string("invalid JSON in ") + what);
  return j;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

}  // namespace

std::string format_double(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  return std::to_string(v);
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a;
    if (!(ls >> a)) {
      std::string junk;
      std::istringstream probe(line);
      if (probe >> junk) throw InputError("graph: non-numeric token: " + junk);
      continue;
    }
    if (n < 0) {
      long long b;
      if (!(ls >> b) || a < 0 || b < 0)
        throw InputError("graph: bad header line");
      n = static_cast<int>(a);
      m = b;
      continue;
    }
    long long b;
    if (!(ls >> b)) throw InputError("graph: edge line needs two endpoints");
    std::string extra;
    if (ls >> extra) throw InputError("graph: trailing tokens on edge line");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw InputError("graph: missing header line");
  if (m >= 0 && m != static_cast<long long>(edges.size()))
    throw InputError("graph: edge count mismatch with header");
  return Graph(n, edges);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edges().size() << '\n';
  for (auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_json(const std::string& text) {
  json j = parse_json(text, "graph");
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON: need object with n and edges");
  if (!j["n"].is_number_integer())
    throw InputError("graph JSON: n must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError("graph JSON: edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

StepGraphon parse_step_graphon_json(const std::string& text) {
  json j = parse_json(text, "step graphon");
  if (!j.is_object() || !j.contains("n") || !j.contains("values"))
    throw InputError("step graphon JSON: need object with n and values");
  if (!j["n"].is_number_integer())
    throw InputError("step graphon JSON: n must be an integer");
  int n = j["n"].get<int>();
  if (n <= 0) throw InputError("step graphon JSON: n must be positive");
  auto& rows = j["values"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InputError("step graphon JSON: values must be an n x n matrix");
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(n) * n);
  for (auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("step graphon JSON: values must be an n x n matrix");
    for (auto& v : row) {
      if (!v.is_number())
        throw InputError("step graphon JSON: non-numeric value");
      vals.push_back(v.get<double>());
    }
  }
  return StepGraphon(n, std::move(vals));
}

std::string step_graphon_to_json(const StepGraphon& w) {
  json rows = json::array();
  for (int i = 0; i < w.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.n(); ++j) row.push_back(w.value(i, j));
    rows.push_back(std::move(row));
  }
  json j;
  j["n"] = w.n();
  j["values"] = std::move(rows);
  return j.dump();
}

BoundarySpec parse_boundary_json(const std::string& text) {
  json j = parse_json(text, "boundary");
  if (!j.is_object() || !j.contains("breakpoints"))
    throw InputError("boundary JSON: need object with breakpoints");
  std::vector<std::pair<double, double>> bp;
  for (auto& p : j["breakpoints"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number())
      throw InputError("boundary JSON: breakpoint must be [x, r] numbers");
    bp.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return BoundarySpec(std::move(bp));
}

std::string boundary_to_json(const BoundarySpec& b) {
  json arr = json::array();
  for (auto& [x, r] : b.breakpoints()) arr.push_back({x, r});
  json j;
  j["breakpoints"] = std::move(arr);
  return j.dump();
}

CdfSpec::CdfSpec(std::vector<std::pair<double, double>> breakpoints)
    : bp(std::move(breakpoints)) {
  if (bp.size() < 2) throw InputError("cdf: need at least 2 breakpoints");
  for (auto& [x, f] : bp)
    if (!std::isfinite(x) || !std::isfinite(f))
      throw InputError("cdf: non-finite breakpoint");
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    if (bp[k + 1].first <= bp[k].first)
      throw InputError("cdf: breakpoint ts must strictly increase");
    if (bp[k + 1].second < bp[k].second)
      throw InputError("cdf: values must be non-decreasing");
  }
  if (std::fabs(bp.front().second) > 1e-9 ||
      std::fabs(bp.back().second - 1.0) > 1e-9)
    throw InputError("cdf: values must run from 0 to 1");
  bp.front().second = 0.0;
  bp.back().second = 1.0;
}

double CdfSpec::eval(double t) const {
  if (t <= bp.front().first) return 0.0;
  if (t >= bp.back().first) return 1.0;
  size_t lo = 0, hi = bp.size() - 1;
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (bp[mid].first <= t)
      lo = mid;
    else
      hi = mid;
  }
  auto [x0, f0] = bp[lo];
  auto [x1, f1] = bp[lo + 1];
  return f0 + (f1 - f0) * ((t - x0) / (x1 - x0));
}

double CdfSpec::inverse(double u) const {
  if (u < 0 || u > 1) throw InputError("cdf: inverse argument outside [0,1]");
  if (u <= 0) return bp.front().first;
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    auto [x0, f0] = bp[k];
    auto [x1, f1] = bp[k + 1];
    if (f1 >= u) {
      if (f1 == f0) return x1;
      if (f0 >= u) return x0;
      return x0 + (x1 - x0) * ((u - f0) / (f1 - f0));
    }
  }
  return bp.back().first;
}

CdfSpec parse_cdf_json(const std::string& text) {
  json j = parse_json(text, "cdf");
  if (!j.is_object() || !j.contains("breakpoints"))
    throw InputError("cdf JSON: need object with breakpoints");
  std::vector<std::pair<double, double>> bp;
  for (auto& p : j["breakpoints"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number())
      throw InputError("cdf JSON: breakpoint must be [t, F] numbers");
    bp.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return CdfSpec(std::move(bp));
}

std::vector<double> parse_embedding_json(const std::string& text) {
  json j = parse_json(text, "embedding");
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object())
    throw InputError("embedding JSON: need object with coords map");
  auto& co = j["coords"];
  std::vector<double> out(co.size(), 0.0);
  std::vector<char> seen(co.size(), 0);
  for (auto& [key, val] : co.items()) {
    int idx;
    try {
      idx = std::stoi(key);
    } catch (...) {
      throw InputError("embedding JSON: non-integer vertex key: " + key);
    }
    if (idx < 0 || idx >= static_cast<int>(out.size()) || seen[idx])
      throw InputError("embedding JSON: vertex keys must cover 0..n-1 once");
    if (!val.is_number())
      throw InputError("embedding JSON: non-numeric coordinate");
    out[idx] = val.get<double>();
    seen[idx] = 1;
  }
  return out;
}

std::string embedding_to_json(const std::vector<double>& coords) {
  std::ostringstream out;
  out << "{\"coords\":{";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ',';
    out << '"' << i << "\":" << format_double(coords[i]);
  }
  out << "}}";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("write failed: " + path);
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  return looks_like_json(text) ? parse_graph_json(text)
                               : parse_graph_text(text);
}

StepGraphon load_step_graphon(const std::string& path) {
  return parse_step_graphon_json(read_file(path));
}

BoundarySpec load_boundary(const std::string& path) {
  return parse_boundary_json(read_file(path));
}

CdfSpec load_cdf(const std::string& path) {
  return parse_cdf_json(read_file(path));
}

}  // namespace linembed
