#include <cmath>
#include <sstream>

#include "doctest.h"
#include "linembed/errors.hpp"
#include "linembed/graph.hpp"
#include "linembed/io.hpp"
#include "linembed/rational.hpp"
#include "linembed/rng.hpp"
#include "linembed/step_graphon.hpp"
#include "linembed/subset.hpp"

using namespace linembed;

TEST_CASE("rational arithmetic normalizes and compares") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(1, 64).str() == "1/64");
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(1, 2).to_double() == 0.5);
  CHECK_THROWS(Rat(1, 0));
  // from128 reduces before narrowing
  Rat big = Rat::from128((__int128)1 << 80, (__int128)1 << 81);
  CHECK(big == Rat(1, 2));
}

TEST_CASE("graph construction and adjacency") {
  Graph g(4, {{0, 1}, {2, 1}, {2, 3}});
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.connected());
  // edges normalized to u < v and sorted
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(Graph(3, {{0, 1}}).connected());
  CHECK(Graph(1, {}).connected());
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}

TEST_CASE("orderings validate and invert") {
  Ordering id = Ordering::identity(4);
  CHECK(id.perm == std::vector<int>{0, 1, 2, 3});
  CHECK(id.pos == std::vector<int>{0, 1, 2, 3});
  Ordering o = Ordering::from_perm({2, 0, 3, 1});
  CHECK(o.pos[2] == 0);
  CHECK(o.pos[1] == 3);
  Ordering r = o.reversed();
  CHECK(r.perm == std::vector<int>{1, 3, 0, 2});
  CHECK_THROWS_AS(Ordering::from_perm({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Ordering::from_perm({0, 2}), InputError);
}

TEST_CASE("subset masks track counts and compare lexicographically") {
  SubsetMask a(5);
  CHECK(a.count() == 0);
  a.set(3, true);
  a.flip(1);
  CHECK(a.count() == 2);
  CHECK(a.members() == std::vector<int>{1, 3});
  CHECK(SubsetMask::from_bits(5, 0b01010) == a);
  SubsetMask b = SubsetMask::from_indices(5, {1, 2});
  CHECK(SubsetMask::lex_less(b, a));       // {1,2} before {1,3}
  CHECK_FALSE(SubsetMask::lex_less(a, a));
  SubsetMask c = SubsetMask::from_indices(5, {1});
  CHECK(SubsetMask::lex_less(c, a));       // prefix comes first
  CHECK(SubsetMask::all(3).count() == 3);
}

TEST_CASE("step graphon blocks, refinement, permutation") {
  StepGraphon w(2, {0.0, 1.0, 1.0, 0.5});
  CHECK(w.value(0, 1) == 1.0);
  CHECK(w.block_of(0.0) == 0);
  CHECK(w.block_of(0.49) == 0);
  CHECK(w.block_of(0.5) == 1);
  CHECK(w.block_of(1.0) == 1);  // x = 1 joins the last block
  CHECK(w.eval(0.2, 0.8) == 1.0);
  CHECK(w.bound() == 1.0);
  CHECK(w.in_w0());
  CHECK_FALSE(StepGraphon(1, {1.5}).in_w0());

  StepGraphon r = w.refined(3);
  CHECK(r.n() == 6);
  for (double x : {0.1, 0.4, 0.6, 0.9})
    for (double y : {0.2, 0.7}) CHECK(r.eval(x, y) == w.eval(x, y));

  StepGraphon p = w.permuted({1, 0});
  CHECK(p.value(0, 0) == 0.5);
  CHECK(p.value(1, 1) == 0.0);
  CHECK(p.value(0, 1) == 1.0);

  CHECK_THROWS_AS(StepGraphon(2, {0, 1, 0.5, 0}), InputError);  // asymmetric
  CHECK_THROWS_AS(StepGraphon(2, {0, 1}), InputError);          // wrong size
}

TEST_CASE("graph to step graphon puts 1 on the diagonal") {
  Graph g(3, {{0, 1}});
  StepGraphon w = StepGraphon::from_graph(g, Ordering::identity(3));
  CHECK(w.value(0, 0) == 1.0);
  CHECK(w.value(1, 1) == 1.0);
  CHECK(w.value(0, 1) == 1.0);
  CHECK(w.value(0, 2) == 0.0);
  // ordering permutes the blocks
  StepGraphon w2 = StepGraphon::from_graph(g, Ordering::from_perm({2, 0, 1}));
  CHECK(w2.value(1, 2) == 1.0);  // ranks of 0 and 1
  CHECK(w2.value(0, 1) == 0.0);
}

TEST_CASE("quantization detects denominators and round-trips") {
  StepGraphon w(2, {0.25, 0.5, 0.5, 1.0});
  auto s = detect_quantization(w);
  REQUIRE(s.has_value());
  CHECK(*s == 4);
  QuantizedGraphon q = QuantizedGraphon::from_step(w, *s);
  CHECK(q.value(0, 0) == 1);
  CHECK(q.value(1, 1) == 4);
  StepGraphon back = q.to_step();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(back.value(i, j) == w.value(i, j));
  CHECK_FALSE(detect_quantization(StepGraphon(1, {0.3}), 3).has_value());
  CHECK(detect_quantization(StepGraphon(1, {0.3}), 10).value() == 10);
}

TEST_CASE("graph text and json round-trip") {
  std::string text = "# two edges\n3 2\n0 1\n1 2\n";
  Graph g = parse_graph_text(text);
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  Graph g2 = parse_graph_text(graph_to_text(g));
  CHECK(g2.edges() == g.edges());
  Graph g3 = parse_graph_json(graph_to_json(g));
  CHECK(g3.n() == 3);
  CHECK(g3.edges() == g.edges());
  CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), InputError);   // short
  CHECK_THROWS_AS(parse_graph_text("oops"), InputError);
  CHECK_THROWS_AS(parse_graph_json("{\"n\": 2}"), InputError);
}

TEST_CASE("step graphon and boundary json round-trip") {
  StepGraphon w(2, {0.0, 0.25, 0.25, 1.0});
  StepGraphon w2 = parse_step_graphon_json(step_graphon_to_json(w));
  CHECK(w2.n() == 2);
  CHECK(w2.values() == w.values());

  BoundarySpec b({{0.0, 0.25}, {0.5, 0.5}, {0.75, 1.0}, {1.0, 1.0}});
  BoundarySpec b2 = parse_boundary_json(boundary_to_json(b));
  REQUIRE(b2.breakpoints().size() == 4);
  CHECK(b2.breakpoints()[1].second == 0.5);
}

TEST_CASE("embedding json round-trip keys coordinates by vertex") {
  std::vector<double> coords = {0.0, 0.625, 1.25};
  std::string j = embedding_to_json(coords);
  CHECK(j.find("\"coords\"") != std::string::npos);
  std::vector<double> back = parse_embedding_json(j);
  CHECK(back == coords);
  CHECK_THROWS_AS(parse_embedding_json("{\"coords\": {\"0\": 1.0, \"2\": 2.0}}"),
                  InputError);
}

TEST_CASE("format_double is shortest round-trip") {
  for (double v : {0.0, 1.0, -2.0, 0.5, 1.0 / 3.0, 0.1, 1e-9, 123456.75,
                   2.0 / 64.0, 0.015625}) {
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2.0");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("cdf spec evaluates and inverts") {
  CdfSpec f({{0.0, 0.0}, {2.0, 0.5}, {4.0, 1.0}});
  CHECK(f.eval(-1.0) == 0.0);
  CHECK(f.eval(0.0) == 0.0);
  CHECK(f.eval(1.0) == doctest::Approx(0.25));
  CHECK(f.eval(3.0) == doctest::Approx(0.75));
  CHECK(f.eval(5.0) == 1.0);
  CHECK(f.inverse(0.25) == doctest::Approx(1.0));
  CHECK(f.inverse(0.0) == doctest::Approx(0.0));
  CHECK(f.inverse(1.0) == doctest::Approx(4.0));
  // inverse then eval is identity on [0,1] for strictly increasing F
  for (double u : {0.1, 0.3, 0.5, 0.77, 0.97})
    CHECK(f.eval(f.inverse(u)) == doctest::Approx(u));
  CHECK_THROWS_AS(CdfSpec({{0.0, 0.0}}), InputError);
  CHECK_THROWS_AS(CdfSpec({{0.0, 0.1}, {1.0, 1.0}}), InputError);
}

TEST_CASE("rng streams are stable and independent") {
  // pinned values keep sampled corpora reproducible across refactors
  CHECK(mix_seed(0, kStreamLatents) == mix_seed(0, kStreamLatents));
  CHECK(mix_seed(0, kStreamLatents) != mix_seed(0, kStreamEdges));
  CHECK(mix_seed(1, kStreamEdges, 0) != mix_seed(1, kStreamEdges, 1));
  Rng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng d(9);
  for (int i = 0; i < 200; ++i) CHECK(d.below(7) < 7);
}
