// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crystal/build.hpp"
#include "crystal/decomposition.hpp"
#include "crystal/gt.hpp"
#include "crystal/verify.hpp"

using namespace crystal;

TEST_CASE("gradings at the distinguished vertices") {
  const ColoredDigraph g = build_rc(2, 1);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  CHECK(emb.a() == 2);
  CHECK(emb.b() == 1);
  CHECK(emb.grading(an.source()) == Grading{0, 0, 0, 0});
  CHECK(emb.grading(an.sink()) == Grading{2, 1, 1, 2});
  CHECK(emb.rho(an.source()) == Point3{0, 0, 0});
  CHECK(emb.rho(an.sink()) == Point3{2, 1, 3});

  const SailDecomposition dec = decompose(g, an);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 1; ++j)
      CHECK(emb.grading(dec.critical(i, j)) == Grading{i, j, j, i});
}

TEST_CASE("eps/delta measures the distance from the diagonal") {
  const ColoredDigraph g = build_rc(2, 1);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  for (Vertex v : an.critical_vertices())
    CHECK(emb.eps_delta(v) == EpsDelta{0, 0});
  // strictly inside a left sail: one step off the diagonal
  CHECK(emb.eps_delta(g.vertex("L0(0,1)")) == EpsDelta{1, -2});
  // strictly inside a right sail of K(1,2)
  const ColoredDigraph h = build_rc(1, 2);
  const CrystalAnalysis han(h);
  const Embedding hemb(h, han);
  const EpsDelta ed = hemb.eps_delta(h.vertex("R0(1,0)"));
  CHECK(ed.delta == 1);
  CHECK(ed.eps == -2);
  CHECK(verify::eps_delta_relations(g, an) == std::nullopt);
  CHECK(verify::eps_delta_relations(h, han) == std::nullopt);
}

TEST_CASE("rho is injective and fills the polytope") {
  const ColoredDigraph g = build_rc(2, 2);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  CHECK(g.vertex_count() == 27);
  std::set<Point3> image;
  for (Vertex v = 0; v < g.vertex_count(); ++v) image.insert(emb.rho(v));
  CHECK(image.size() == 27);
  CHECK(polytope_integer_points(2, 2).size() == 27);
  CHECK(verify::rho_injective(emb) == std::nullopt);
  CHECK(verify::polytope_points(emb) == std::nullopt);
  CHECK(verify::grading_bounds(an, emb) == std::nullopt);
  CHECK(verify::grading_realizability(emb) == std::nullopt);
  CHECK(verify::critical_section(an, emb) == std::nullopt);
  CHECK(verify::rho_edge_steps(g, an, emb) == std::nullopt);
}

TEST_CASE("restoring the split coordinates") {
  CHECK(restore_beta({0, 0, 0}) == std::pair<int, int>{0, 0});
  // sink of K(2,1): rho = (a, b, a+b) restores to (b, a)
  CHECK(restore_beta({2, 1, 3}) == std::pair<int, int>{1, 2});
  CHECK(restore_alpha({3, 1, 2}) == std::pair<int, int>{2, 1});

  const ColoredDigraph g = build_rc(3, 2);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  CHECK(verify::restore_roundtrip(emb) == std::nullopt);
}

TEST_CASE("polytope membership and vertices") {
  CHECK(polytope_contains(2, 1, {Rational(0), Rational(0), Rational(0)}));
  CHECK_FALSE(polytope_contains(2, 1, {Rational(3), Rational(0), Rational(0)}));
  CHECK(polytope_contains(2, 2, {Rational(1, 2), Rational(1), Rational(3, 2)}));
  CHECK_FALSE(polytope_contains(2, 2, {Rational(1, 2), Rational(1), Rational(7, 2)}));

  CHECK(polytope_vertices(2, 2).size() == 7);
  CHECK(polytope_vertices(0, 2).size() == 3);
  CHECK(polytope_vertices(0, 0).size() == 1);
  for (auto [a, b] : {std::pair{2, 2}, std::pair{0, 3}, std::pair{1, 0}})
    CHECK(verify::polytope_vertex_list(a, b) == std::nullopt);
}

TEST_CASE("array conversion round-trips") {
  const ColoredDigraph g = build_rc(1, 1);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  CHECK(emb.to_gt(an.source()) == GtArray{1, 0, 0});
  CHECK(emb.to_gt(an.sink()) == GtArray{2, 2, 1});
  CHECK(gt_arrays(1, 1).size() == 8);
  CHECK(emb.from_gt(GtArray{9, 9, 9}) == std::nullopt);
  CHECK(verify::gt_roundtrip(emb) == std::nullopt);

  const ColoredDigraph h = build_rc(2, 1);
  const CrystalAnalysis han(h);
  const Embedding hemb(h, han);
  CHECK(verify::gt_roundtrip(hemb) == std::nullopt);
}

TEST_CASE("array crystal moves") {
  // border (2,1,0)
  const GtMoves m1 = gt_moves(1, 1, {1, 0, 0});
  REQUIRE(m1.edge2.has_value());
  CHECK(*m1.edge2 == GtArray{1, 1, 0});
  REQUIRE(m1.edge1.has_value());
  CHECK(*m1.edge1 == GtArray{2, 0, 0});

  const GtMoves m2 = gt_moves(1, 1, {2, 2, 0});
  CHECK_FALSE(m2.edge2.has_value());
  REQUIRE(m2.edge1.has_value());
  CHECK(*m2.edge1 == GtArray{2, 2, 1});  // the z-raise beats the x-raise

  const ColoredDigraph g0 = gt_crystal(0, 0);
  CHECK(g0.vertex_count() == 1);
  CHECK(g0.edge_count() == 0);
}

TEST_CASE("the array crystal is the crystal graph") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}}) {
    CHECK(classify(gt_crystal(a, b)).verdict == Verdict::RC);
    CHECK(verify::gt_isomorphism(a, b) == std::nullopt);
  }
}

TEST_CASE("omega and its array form") {
  CHECK(omega_point({0, 0, 0}) == Point3{0, 0, 0});
  // sink of K(2,1): (a, b, a+b) -> (a+b, b, a)
  CHECK(omega_point({2, 1, 3}) == Point3{3, 1, 2});

  const ColoredDigraph g = build_rc(2, 2);
  const CrystalAnalysis an(g);
  const Embedding emb(g, an);
  CHECK(verify::omega_properties(emb) == std::nullopt);

  CHECK(gt_arrays(2, 1).size() == 15);
  CHECK(gt_arrays(1, 2).size() == 15);
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}})
    CHECK(verify::gt_shift_conjugation(a, b) == std::nullopt);
}

TEST_CASE("canonical isomorphism check") {
  const ColoredDigraph g = build_rc(2, 1);
  const auto self = check_isomorphism(g, g);
  REQUIRE(self.map.has_value());
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK((*self.map)[v] == v);

  const auto crossed = check_isomorphism(build_rc(1, 2), build_rc(2, 1));
  CHECK_FALSE(crossed.map.has_value());
  CHECK_FALSE(crossed.mismatch.empty());

  const auto counted = check_isomorphism(build_rc(1, 1), build_rc(2, 1));
  CHECK_FALSE(counted.map.has_value());
}

TEST_CASE("rational parsing for polytope queries") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}
