// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force oracles. These deliberately avoid the library's
// memoized line analysis and bitset closure so the expected values they
// produce stay independent of the code under test.
#pragma once

#include <vector>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"

namespace oracles {

// |{(i,j) : 0 <= i <= j <= n}| by direct enumeration.
inline long long triangle_count(int n) {
  long long c = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) ++c;
  return c;
}

// Per-query DFS, one vertex at a time.
inline bool reachable_dfs(const crystal::ColoredDigraph& g, crystal::Vertex u,
                          crystal::Vertex v) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<crystal::Vertex> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    crystal::Vertex w = stack.back();
    stack.pop_back();
    if (w == v) return true;
    for (int c : {1, 2})
      if (auto x = g.succ(w, c); x && !seen[*x]) {
        seen[*x] = 1;
        stack.push_back(*x);
      }
  }
  return false;
}

// Path-walk length tuple; assumes the monochromatic components are paths.
inline crystal::LengthTuple walk_tuple(const crystal::ColoredDigraph& g,
                                       crystal::Vertex v) {
  crystal::LengthTuple t;
  auto count = [&](int color, bool forward) {
    int steps = 0;
    std::optional<crystal::Vertex> w = v;
    while ((w = forward ? g.succ(*w, color) : g.pred(*w, color))) ++steps;
    return steps;
  };
  t.t1 = count(1, false);
  t.h1 = count(1, true);
  t.t2 = count(2, false);
  t.h2 = count(2, true);
  return t;
}

}  // namespace oracles
