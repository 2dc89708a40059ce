// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystal/build.hpp"
#include "crystal/lattice.hpp"
#include "crystal/verify.hpp"
#include "oracles.hpp"

using namespace crystal;

namespace {

// The eight vertices of K(1,1) by role.
struct K11 {
  ColoredDigraph g = build_rc(1, 1);
  Vertex r00 = g.vertex("L0(0,0)");
  Vertex m0 = g.vertex("L0(0,1)");
  Vertex r10 = g.vertex("L0(1,1)");
  Vertex n0 = g.vertex("R0(1,0)");
  Vertex r01 = g.vertex("L1(0,0)");
  Vertex m1 = g.vertex("L1(0,1)");
  Vertex n1 = g.vertex("R1(1,0)");
  Vertex r11 = g.vertex("L1(1,1)");
};

}  // namespace

TEST_CASE("reachability order basics") {
  const ColoredDigraph g = build_rc(2, 2);
  const PosetView view(g);
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  const Vertex source = view.analysis().source();
  for (Vertex v = 0; v < n; ++v) {
    CHECK(view.leq(v, v));
    CHECK(view.reachable(source, v));
    CHECK(view.leq(source, v));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      CHECK(view.reachable(u, v) == oracles::reachable_dfs(g, u, v));
}

TEST_CASE("the two middle vertices of K(1,1) are incomparable") {
  const K11 k;
  const PosetView view(k.g);
  CHECK_FALSE(view.leq(k.m0, k.n0));
  CHECK_FALSE(view.leq(k.n0, k.m0));
  CHECK_FALSE(view.reachable(k.m0, k.n0));
  CHECK_FALSE(view.reachable(k.n0, k.m0));
}

TEST_CASE("joins and meets of critical vertices live on the grid") {
  const K11 k;
  const PosetView view(k.g);
  CHECK(view.join(k.r01, k.r10) == k.r11);
  CHECK(view.meet(k.r01, k.r10) == k.r00);
  for (Vertex v = 0; v < k.g.vertex_count(); ++v) {
    CHECK(view.join(v, v) == v);
    CHECK(view.meet(v, v) == v);
  }
}

TEST_CASE("closed-form join/meet equals the unique-bound oracle") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    const ColoredDigraph g = build_rc(a, b);
    const PosetView view(g);
    CHECK(verify_lattice_pairs_serial(view) == std::nullopt);
  }
}

TEST_CASE("order formula matches reachability") {
  for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{0, 3}}) {
    const PosetView view(build_rc(a, b));
    CHECK(verify::order_formula_matches_reachability(view) == std::nullopt);
  }
}

TEST_CASE("brute-force lattice test") {
  CHECK(is_lattice_bruteforce(build_rc(1, 1)));
  CHECK(is_lattice_bruteforce(build_rc(2, 2)));
  CHECK(is_lattice_bruteforce(build_rc(3, 0)));

  SUBCASE("two incomparable upper bounds break it") {
    ColoredDigraph::Builder b;
    for (const char* n : {"x", "y", "p", "q"}) b.add_vertex(n);
    b.add_edge("x", "p", 1);
    b.add_edge("x", "q", 2);
    b.add_edge("y", "p", 2);
    b.add_edge("y", "q", 1);
    CHECK_FALSE(is_lattice_bruteforce(b.build()));
  }

  SUBCASE("the two-source fixture is not a lattice") {
    CHECK_FALSE(is_lattice_bruteforce(verify::two_source_fixture()));
  }

  SUBCASE("cyclic input is rejected") {
    ColoredDigraph::Builder b;
    b.add_vertex("x");
    b.add_vertex("y");
    b.add_edge("x", "y", 1);
    b.add_edge("y", "x", 1);
    CHECK_THROWS_AS(is_lattice_bruteforce(b.build()), std::invalid_argument);
  }
}

TEST_CASE("lattice laws and sail-bound compatibility") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const PosetView view(build_rc(a, b));
      CHECK(verify::lattice_laws(view) == std::nullopt);
      CHECK(verify::sail_bound_compatibility(view) == std::nullopt);
    }
}

TEST_CASE("K(1,1) is not distributive") {
  const K11 k;
  const PosetView view(k.g);
  // pentagon: r00 < n0 < r11 against r00 < m0 < r10 < r11
  const Vertex lhs = view.meet(k.r10, view.join(k.n0, k.m0));
  const Vertex rhs = view.join(view.meet(k.r10, k.n0), view.meet(k.r10, k.m0));
  CHECK(lhs == k.r10);
  CHECK(rhs == k.m0);
  CHECK(lhs != rhs);
  CHECK(verify::nondistributivity_witness(view) == std::nullopt);
}

TEST_CASE("poset view demands a regular crystal") {
  CHECK_THROWS_AS(PosetView(verify::two_source_fixture()),
                  std::invalid_argument);
}

TEST_CASE("minimal sail bounds around a vertex") {
  const K11 k;
  const PosetView view(k.g);
  CHECK(view.sail_min_above(k.m0) == k.r10);
  CHECK(view.sail_max_below(k.m0) == k.r00);
  CHECK(view.sail_min_above(k.r10) == k.r10);
  CHECK(view.sail_max_below(k.r10) == k.r10);
  CHECK(view.sail_min_above(k.n1) == k.r11);
  CHECK(view.sail_max_below(k.n1) == k.r10);
}
