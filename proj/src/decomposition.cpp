// SPDX-License-Identifier: Apache-2.0
#include "crystal/decomposition.hpp"

#include <algorithm>
#include <map>

namespace crystal {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw DecompositionError("sail decomposition: " + what);
}

// Follow the outgoing `color`-edge only when it belongs to the given side.
// Left sails own 1-edges labeled 0 and 2-edges labeled 1.
std::optional<Vertex> side_succ(const ColoredDigraph& g,
                                const CrystalAnalysis& an, bool left, Vertex v,
                                int color) {
  auto w = g.succ(v, color);
  if (!w) return std::nullopt;
  const int want = ((color == 1) == left) ? 0 : 1;
  if (an.label(v, color) != want) return std::nullopt;
  return w;
}

std::optional<Vertex> side_pred(const ColoredDigraph& g,
                                const CrystalAnalysis& an, bool left, Vertex v,
                                int color) {
  auto u = g.pred(v, color);
  if (!u) return std::nullopt;
  const int want = ((color == 1) == left) ? 0 : 1;
  if (an.label(*u, color) != want) return std::nullopt;
  return u;
}

// One weakly connected component of the side subgraph, rebuilt as a
// triangular grid with verified structure.
Sail trace_sail(const ColoredDigraph& g, const CrystalAnalysis& an, bool left,
                Vertex seed, std::vector<int>& comp, int comp_id) {
  std::vector<Vertex> members{seed};
  comp[seed] = comp_id;
  for (std::size_t k = 0; k < members.size(); ++k) {
    Vertex v = members[k];
    for (int c : {1, 2}) {
      for (auto w : {side_succ(g, an, left, v, c), side_pred(g, an, left, v, c)})
        if (w && comp[*w] < 0) {
          comp[*w] = comp_id;
          members.push_back(*w);
        }
    }
  }

  // Local coordinates: count of side 1-edges / 2-edges from the sail source.
  Vertex src = kNoVertex;
  for (Vertex v : members) {
    if (!side_pred(g, an, left, v, 1) && !side_pred(g, an, left, v, 2)) {
      if (src != kNoVertex) fail("sail has two sources");
      src = v;
    }
  }
  if (src == kNoVertex) fail("sail has no source");

  std::map<Vertex, std::pair<int, int>> coord;
  coord[src] = {0, 0};
  std::vector<Vertex> queue{src};
  int size = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Vertex v = queue[k];
    auto [p, q] = coord[v];
    size = std::max({size, p, q});
    for (int c : {1, 2}) {
      auto w = side_succ(g, an, left, v, c);
      if (!w) continue;
      std::pair<int, int> next = c == 1 ? std::make_pair(p + 1, q)
                                        : std::make_pair(p, q + 1);
      auto it = coord.find(*w);
      if (it == coord.end()) {
        coord[*w] = next;
        queue.push_back(*w);
      } else if (it->second != next) {
        fail("inconsistent local coordinates");
      }
    }
  }
  if (queue.size() != members.size()) fail("sail source does not reach the whole sail");

  Sail sail;
  sail.left = left;
  sail.size = size;
  const std::size_t expect =
      static_cast<std::size_t>(size + 1) * (size + 2) / 2;
  if (members.size() != expect) fail("sail is not a triangular half-grid");
  sail.cells.assign(expect, kNoVertex);
  for (auto& [v, pq] : coord) {
    auto [p, q] = pq;
    const bool valid = left ? (0 <= p && p <= q && q <= size)
                            : (0 <= q && q <= p && p <= size);
    if (!valid) fail("cell coordinates outside the half-grid");
    const std::size_t idx = left
        ? static_cast<std::size_t>(q) * (q + 1) / 2 + p
        : static_cast<std::size_t>(p) * (p + 1) / 2 + q;
    if (sail.cells[idx] != kNoVertex) fail("two vertices share a cell");
    sail.cells[idx] = v;
  }

  // Full grid of side edges, diagonal critical, interior non-critical.
  for (int p = 0; p <= size; ++p) {
    const int lo = left ? p : 0, hi = left ? size : p;
    for (int q = lo; q <= hi; ++q) {
      Vertex v = sail.at(p, q);
      const bool diag = p == q;
      if (an.is_critical(v) != diag)
        fail("criticality does not match the diagonal");
      const bool has1 = left ? p < q : p < size;
      const bool has2 = left ? q < size : q < p;
      auto s1 = side_succ(g, an, left, v, 1);
      auto s2 = side_succ(g, an, left, v, 2);
      if (has1 != s1.has_value() || has2 != s2.has_value())
        fail("side edges do not form the half-grid");
      if (s1 && *s1 != sail.at(p + 1, q)) fail("1-edge leaves the grid");
      if (s2 && *s2 != sail.at(p, q + 1)) fail("2-edge leaves the grid");
    }
  }
  sail.diagonal.resize(size + 1);
  for (int i = 0; i <= size; ++i) sail.diagonal[i] = sail.at(i, i);
  return sail;
}

std::vector<Sail> side_sails(const ColoredDigraph& g, const CrystalAnalysis& an,
                             bool left) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<Sail> sails;
  for (Vertex v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    bool incident = an.is_critical(v);
    for (int c : {1, 2})
      incident = incident || side_succ(g, an, left, v, c) ||
                 side_pred(g, an, left, v, c);
    if (!incident) continue;
    sails.push_back(
        trace_sail(g, an, left, v, comp, static_cast<int>(sails.size())));
  }
  return sails;
}

int sail_containing(const std::vector<Sail>& sails, Vertex v) {
  for (std::size_t k = 0; k < sails.size(); ++k)
    for (Vertex w : sails[k].cells)
      if (w == v) return static_cast<int>(k);
  fail("vertex not covered by any sail");
}

}  // namespace

SailDecomposition decompose(const ColoredDigraph& g, const CrystalAnalysis& an) {
  if (an.verdict() != Verdict::RC)
    throw std::invalid_argument("sail decomposition requires an RC graph");

  std::vector<Sail> left_raw = side_sails(g, an, true);
  std::vector<Sail> right_raw = side_sails(g, an, false);
  if (left_raw.empty() || right_raw.empty()) fail("no sails found");
  const int a = left_raw[0].size;
  const int b = right_raw[0].size;
  for (const Sail& s : left_raw)
    if (s.size != a) fail("left sails differ in size");
  for (const Sail& s : right_raw)
    if (s.size != b) fail("right sails differ in size");
  if (left_raw.size() != static_cast<std::size_t>(b) + 1 ||
      right_raw.size() != static_cast<std::size_t>(a) + 1)
    fail("unexpected number of sails");

  // Numbering: L_j contains diagonal vertex j of the right sail through the
  // source; R_i contains diagonal vertex i of the left sail through it.
  Vertex s = an.source();
  const std::vector<Vertex> r0_diag =
      right_raw[sail_containing(right_raw, s)].diagonal;
  const std::vector<Vertex> l0_diag =
      left_raw[sail_containing(left_raw, s)].diagonal;
  if (r0_diag[0] != s || l0_diag[0] != s)
    fail("source is not the first diagonal vertex of its sails");

  SailDecomposition dec;
  dec.a = a;
  dec.b = b;
  std::vector<char> taken_left(left_raw.size(), 0), taken_right(right_raw.size(), 0);
  for (int j = 0; j <= b; ++j) {
    int k = sail_containing(left_raw, r0_diag[j]);
    if (taken_left[k]) fail("left sail numbered twice");
    taken_left[k] = 1;
    dec.left_sails.push_back(std::move(left_raw[k]));
    dec.left_sails.back().index = j;
  }
  for (int i = 0; i <= a; ++i) {
    int k = sail_containing(right_raw, l0_diag[i]);
    if (taken_right[k]) fail("right sail numbered twice");
    taken_right[k] = 1;
    dec.right_sails.push_back(std::move(right_raw[k]));
    dec.right_sails.back().index = i;
  }

  const std::size_t n = g.vertex_count();
  dec.left_of.assign(n, std::nullopt);
  dec.right_of.assign(n, std::nullopt);
  for (int j = 0; j <= b; ++j) {
    const Sail& sail = dec.left_sails[j];
    for (int p = 0; p <= sail.size; ++p)
      for (int q = p; q <= sail.size; ++q) {
        Vertex v = sail.at(p, q);
        if (dec.left_of[v]) fail("vertex in two left sails");
        dec.left_of[v] = SailMembership{j, p, q};
      }
  }
  for (int i = 0; i <= a; ++i) {
    const Sail& sail = dec.right_sails[i];
    for (int p = 0; p <= sail.size; ++p)
      for (int q = 0; q <= p; ++q) {
        Vertex v = sail.at(p, q);
        if (dec.right_of[v]) fail("vertex in two right sails");
        dec.right_of[v] = SailMembership{i, p, q};
      }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!dec.left_of[v] && !dec.right_of[v]) fail("vertex in no sail");
    if (an.is_critical(v) != (dec.left_of[v] && dec.right_of[v]))
      fail("criticals are exactly the doubly covered vertices");
  }

  // The intersection grid: diagonal vertex i of L_j must be diagonal vertex j
  // of R_i.
  dec.crit_grid.assign(static_cast<std::size_t>(a + 1) * (b + 1), kNoVertex);
  dec.crit_index.assign(n, {-1, -1});
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      Vertex v = dec.left_sails[j].diagonal[i];
      if (dec.right_sails[i].diagonal[j] != v)
        fail("sail diagonals do not intersect consistently");
      dec.crit_grid[static_cast<std::size_t>(i) * (b + 1) + j] = v;
      dec.crit_index[v] = {i, j};
    }
  return dec;
}

SailDecomposition decompose(const ColoredDigraph& g) {
  const CrystalAnalysis an(g);
  return decompose(g, an);
}

ExtractedSail extract_sail(const ColoredDigraph& g, const CrystalAnalysis& an,
                           const Sail& sail) {
  ColoredDigraph::Builder b;
  std::vector<std::string> names(g.vertex_count());
  for (int p = 0; p <= sail.size; ++p) {
    const int lo = sail.left ? p : 0, hi = sail.left ? sail.size : p;
    for (int q = lo; q <= hi; ++q) {
      Vertex v = sail.at(p, q);
      names[v] = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      b.add_vertex(names[v]);
    }
  }
  for (int p = 0; p <= sail.size; ++p) {
    const int lo = sail.left ? p : 0, hi = sail.left ? sail.size : p;
    for (int q = lo; q <= hi; ++q) {
      Vertex v = sail.at(p, q);
      for (int c : {1, 2})
        if (auto w = side_succ(g, an, sail.left, v, c))
          b.add_edge(names[v], names[*w], c);
    }
  }
  ExtractedSail out{b.build(), {}};
  for (int i = 0; i <= sail.size; ++i)
    out.diagonal.push_back("(" + std::to_string(i) + "," + std::to_string(i) + ")");
  return out;
}

}  // namespace crystal
