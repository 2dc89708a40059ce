// SPDX-License-Identifier: Apache-2.0
#include "crystal/reach.hpp"

#include <algorithm>

namespace crystal {

std::vector<Vertex> topological_order(const ColoredDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (int c : {1, 2})
      if (g.pred(v, c)) ++indeg[v];
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t k = 0; k < order.size(); ++k) {
    Vertex v = order[k];
    for (int c : {1, 2})
      if (auto w = g.succ(v, c))
        if (--indeg[*w] == 0) order.push_back(*w);
  }
  if (order.size() != n)
    throw std::invalid_argument("graph contains a directed cycle");
  return order;
}

ReachMatrix transitive_closure_serial(const ColoredDigraph& g) {
  topological_order(g);  // contract check only
  const std::size_t n = g.vertex_count();
  ReachMatrix m(n);
  std::vector<char> seen(n);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, s);
    seen[s] = 1;
    m.set(s, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int c : {1, 2})
        if (auto w = g.succ(v, c))
          if (!seen[*w]) {
            seen[*w] = 1;
            m.set(s, *w);
            stack.push_back(*w);
          }
    }
  }
  return m;
}

ReachMatrix transitive_closure_parallel(const ColoredDigraph& g) {
  const auto order = topological_order(g);
  const std::size_t n = g.vertex_count();
  // depth = longest path to a sink; rows at equal depth are independent
  std::vector<int> depth(n, 0);
  int max_depth = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int c : {1, 2})
      if (auto w = g.succ(*it, c))
        depth[*it] = std::max(depth[*it], depth[*w] + 1);
    max_depth = std::max(max_depth, depth[*it]);
  }
  std::vector<std::vector<Vertex>> levels(max_depth + 1);
  for (Vertex v = 0; v < n; ++v) levels[depth[v]].push_back(v);

  ReachMatrix m(n);
  const std::size_t words = m.words_per_row();
  for (const auto& level : levels) {
    const std::int64_t count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      Vertex v = level[k];
      auto row = m.row_mut(v);
      for (int c : {1, 2})
        if (auto w = g.succ(v, c)) {
          auto src = m.row(*w);
          for (std::size_t i = 0; i < words; ++i) row[i] |= src[i];
        }
      m.set(v, v);
    }
  }
  return m;
}

}  // namespace crystal
