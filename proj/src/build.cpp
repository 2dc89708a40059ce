// SPDX-License-Identifier: Apache-2.0
#include "crystal/build.hpp"

#include <unordered_map>

namespace crystal {

namespace {

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

std::string sail_vertex_name(bool left, int sail, int p, int q) {
  return (left ? "L" : "R") + std::to_string(sail) + pair_name(p, q);
}

ColoredDigraph build_left_sail(int a) {
  require_nonnegative(a, "sail size");
  ColoredDigraph::Builder b;
  for (int i = 0; i <= a; ++i)
    for (int j = i; j <= a; ++j) b.add_vertex(pair_name(i, j));
  for (int i = 0; i <= a; ++i)
    for (int j = i; j <= a; ++j) {
      if (i < j) b.add_edge(pair_name(i, j), pair_name(i + 1, j), 1);
      if (j < a) b.add_edge(pair_name(i, j), pair_name(i, j + 1), 2);
    }
  return b.build();
}

ColoredDigraph build_right_sail(int b) {
  require_nonnegative(b, "sail size");
  ColoredDigraph::Builder bld;
  for (int i = 0; i <= b; ++i)
    for (int j = 0; j <= i; ++j) bld.add_vertex(pair_name(i, j));
  for (int i = 0; i <= b; ++i)
    for (int j = 0; j <= i; ++j) {
      if (i < b) bld.add_edge(pair_name(i, j), pair_name(i + 1, j), 1);
      if (j < i) bld.add_edge(pair_name(i, j), pair_name(i, j + 1), 2);
    }
  return bld.build();
}

std::vector<std::string> sail_diagonal(int size) {
  std::vector<std::string> out;
  out.reserve(size + 1);
  for (int i = 0; i <= size; ++i) out.push_back(pair_name(i, i));
  return out;
}

ColoredDigraph diagonal_product(const ColoredDigraph& g,
                                std::span<const std::string> s,
                                const ColoredDigraph& h,
                                std::span<const std::string> t) {
  std::unordered_map<Vertex, int> s_pos, t_pos;
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto v = g.find(s[k]);
    if (!v)
      throw std::invalid_argument("glue vertex '" + s[k] +
                                  "' is not in the left factor");
    if (!s_pos.emplace(*v, static_cast<int>(k)).second)
      throw std::invalid_argument("glue vertex '" + s[k] + "' listed twice");
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto v = h.find(t[k]);
    if (!v)
      throw std::invalid_argument("glue vertex '" + t[k] +
                                  "' is not in the right factor");
    if (!t_pos.emplace(*v, static_cast<int>(k)).second)
      throw std::invalid_argument("glue vertex '" + t[k] + "' listed twice");
  }

  auto glue_name = [](int si, int ti) {
    return "X" + std::to_string(si) + "," + std::to_string(ti);
  };
  auto g_name = [&](int ti, Vertex v) {
    auto it = s_pos.find(v);
    if (it != s_pos.end()) return glue_name(it->second, ti);
    return "G" + std::to_string(ti) + ":" + g.name(v);
  };
  auto h_name = [&](int si, Vertex w) {
    auto it = t_pos.find(w);
    if (it != t_pos.end()) return glue_name(si, it->second);
    return "H" + std::to_string(si) + ":" + h.name(w);
  };

  ColoredDigraph::Builder b;
  for (std::size_t ti = 0; ti < t.size(); ++ti)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      b.add_vertex(g_name(static_cast<int>(ti), v));
  for (std::size_t si = 0; si < s.size(); ++si)
    for (Vertex w = 0; w < h.vertex_count(); ++w)
      if (!t_pos.count(w)) b.add_vertex(h_name(static_cast<int>(si), w));
  for (std::size_t ti = 0; ti < t.size(); ++ti)
    for (const Edge& e : g.edges())
      b.add_edge(g_name(static_cast<int>(ti), e.tail),
                 g_name(static_cast<int>(ti), e.head), e.color);
  for (std::size_t si = 0; si < s.size(); ++si)
    for (const Edge& e : h.edges())
      b.add_edge(h_name(static_cast<int>(si), e.tail),
                 h_name(static_cast<int>(si), e.head), e.color);
  return b.build();
}

ColoredDigraph build_rc(int a, int b) {
  require_nonnegative(a, "parameter a");
  require_nonnegative(b, "parameter b");
  ColoredDigraph::Builder bld;
  auto lname = [](int j, int p, int q) { return sail_vertex_name(true, j, p, q); };
  // Right-sail cell (p,q); diagonal cells resolve to the owning left-sail id.
  auto rname = [&](int i, int p, int q) {
    return p == q ? lname(p, i, i) : sail_vertex_name(false, i, p, q);
  };
  for (int j = 0; j <= b; ++j)
    for (int p = 0; p <= a; ++p)
      for (int q = p; q <= a; ++q) bld.add_vertex(lname(j, p, q));
  for (int i = 0; i <= a; ++i)
    for (int p = 0; p <= b; ++p)
      for (int q = 0; q < p; ++q)
        bld.add_vertex(sail_vertex_name(false, i, p, q));
  for (int j = 0; j <= b; ++j)
    for (int p = 0; p <= a; ++p)
      for (int q = p; q <= a; ++q) {
        if (p < q) bld.add_edge(lname(j, p, q), lname(j, p + 1, q), 1);
        if (q < a) bld.add_edge(lname(j, p, q), lname(j, p, q + 1), 2);
      }
  for (int i = 0; i <= a; ++i)
    for (int p = 0; p <= b; ++p)
      for (int q = 0; q <= p; ++q) {
        if (p < b) bld.add_edge(rname(i, p, q), rname(i, p + 1, q), 1);
        if (q < p) bld.add_edge(rname(i, p, q), rname(i, p, q + 1), 2);
      }
  return bld.build();
}

long long rc_vertex_count(int a, int b) {
  return static_cast<long long>(a + 1) * (b + 1) * (a + b + 2) / 2;
}

ColoredDigraph dualize(const ColoredDigraph& g) {
  ColoredDigraph::Builder b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.name(v));
  for (const Edge& e : g.edges()) b.add_edge(e.head, e.tail, e.color);
  return b.build();
}

ColoredDigraph doubled_swap(const ColoredDigraph& g, std::string_view tail,
                            std::string_view head, int color) {
  Vertex t = g.vertex(tail);
  Vertex h = g.vertex(head);
  if (!g.has_edge(t, h, color)) throw std::invalid_argument("no such edge");
  ColoredDigraph::Builder b;
  auto copy_name = [&](int copy, Vertex v) {
    return std::to_string(copy) + ":" + g.name(v);
  };
  for (int copy : {1, 2})
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      b.add_vertex(copy_name(copy, v));
  for (int copy : {1, 2})
    for (const Edge& e : g.edges()) {
      if (e.tail == t && e.head == h && e.color == color) continue;
      b.add_edge(copy_name(copy, e.tail), copy_name(copy, e.head), e.color);
    }
  b.add_edge(copy_name(1, t), copy_name(2, h), color);
  b.add_edge(copy_name(2, t), copy_name(1, h), color);
  return b.build();
}

}  // namespace crystal
