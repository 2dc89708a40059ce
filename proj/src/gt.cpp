// SPDX-License-Identifier: Apache-2.0
#include "crystal/gt.hpp"

#include <algorithm>
#include <set>

#include "crystal/reach.hpp"

namespace crystal {

Embedding::Embedding(const ColoredDigraph& g, const CrystalAnalysis& an)
    : g_(&g), an_(&an) {
  if (an.verdict() != Verdict::RC)
    throw std::invalid_argument("embedding requires an RC graph");
  auto [a, b] = an.params();
  a_ = a;
  b_ = b;

  const std::size_t n = g.vertex_count();
  grad_.assign(n, Grading{});
  std::vector<char> has(n, 0);
  has[an.source()] = 1;
  for (Vertex v : topological_order(g)) {
    if (!has[v])
      throw std::logic_error("vertex unreachable from the source of an RC graph");
    for (int c : {1, 2}) {
      auto w = g.succ(v, c);
      if (!w) continue;
      Grading next = grad_[v];
      const int l = an.label(v, c);
      if (c == 1)
        ++(l ? next.alpha1 : next.alpha0);
      else
        ++(l ? next.beta1 : next.beta0);
      if (!has[*w]) {
        grad_[*w] = next;
        has[*w] = 1;
      } else if (!(grad_[*w] == next)) {
        throw std::logic_error("label counts differ across paths to '" +
                               g.name(*w) + "'");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!rho_index_.emplace(rho(v), v).second)
      throw std::logic_error("rho collides on '" + g.name(v) + "'");
}

std::optional<Vertex> Embedding::vertex_with_rho(const Point3& p) const {
  auto it = rho_index_.find(p);
  if (it == rho_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> Embedding::from_gt(const GtArray& m) const {
  if (!gt_valid(a_, b_, m)) return std::nullopt;
  return vertex_with_rho({m.z, m.x - a_, m.y});
}

EpsDelta Embedding::eps_delta(Vertex v) const {
  const LengthTuple& t = an_->tuple(v);
  return {a_ - t.t1 - t.h2, b_ - t.t2 - t.h1};
}

std::pair<int, int> restore_beta(const Point3& rho) {
  const auto [a0, a1, beta] = rho;
  return {std::min(a1, beta - a0), std::max(a0, beta - a1)};
}

std::pair<int, int> restore_alpha(const Point3& rho_prime) {
  const auto [alpha, b0, b1] = rho_prime;
  return {std::min(b1, alpha - b0), std::max(b0, alpha - b1)};
}

bool polytope_contains(int a, int b, const RPoint3& pt) {
  const Rational &a0 = pt[0], &a1 = pt[1], &beta = pt[2];
  return Rational(0) <= a0 && a0 <= Rational(a) && Rational(0) <= a1 &&
         a1 <= Rational(b) && a0 <= beta && beta <= a1 + Rational(a);
}

bool polytope_prime_contains(int a, int b, const RPoint3& pt) {
  const Rational &alpha = pt[0], &b0 = pt[1], &b1 = pt[2];
  return Rational(0) <= b0 && b0 <= Rational(b) && Rational(0) <= b1 &&
         b1 <= Rational(a) && b0 <= alpha && alpha <= b1 + Rational(b);
}

std::vector<Point3> polytope_vertices(int a, int b) {
  const std::vector<Point3> listed = {
      {0, 0, 0}, {0, 0, a},     {0, b, 0},        {a, 0, a},
      {a, b, a}, {0, b, a + b}, {a, b, a + b}};
  std::vector<Point3> out;
  for (const Point3& p : listed)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::vector<Point3> polytope_integer_points(int a, int b) {
  std::vector<Point3> out;
  for (int a0 = 0; a0 <= a; ++a0)
    for (int a1 = 0; a1 <= b; ++a1)
      for (int beta = a0; beta <= a1 + a; ++beta) out.push_back({a0, a1, beta});
  return out;
}

RPoint3 omega(const RPoint3& p) {
  const Rational &a0 = p[0], &a1 = p[1], &beta = p[2];
  return {a0 + a1, std::min(a1, beta - a0), std::max(a0, beta - a1)};
}

Point3 omega_point(const Point3& p) {
  const auto [a0, a1, beta] = p;
  return {a0 + a1, std::min(a1, beta - a0), std::max(a0, beta - a1)};
}

GtArray omega_tilde(int a, int b, const GtArray& m) {
  return {b + std::max(m.z, m.y - m.x + a), m.x + m.z - a,
          std::min(m.x - a, m.y - m.z)};
}

bool gt_valid(int a, int b, const GtArray& m) {
  return 0 <= m.z && m.z <= a && a <= m.x && m.x <= a + b && m.z <= m.y &&
         m.y <= m.x;
}

std::vector<GtArray> gt_arrays(int a, int b) {
  std::vector<GtArray> out;
  for (int x = a; x <= a + b; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; z <= std::min(a, y); ++z) out.push_back({x, y, z});
  return out;
}

std::string gt_name(const GtArray& m) {
  return std::to_string(m.x) + "," + std::to_string(m.y) + "," +
         std::to_string(m.z);
}

GtMoves gt_moves(int a, int b, const GtArray& m) {
  GtMoves moves;
  if (m.y < m.x) moves.edge2 = GtArray{m.x, m.y + 1, m.z};
  if (m.z < a && m.z < m.y && m.y - m.z > m.x - a)
    moves.edge1 = GtArray{m.x, m.y, m.z + 1};
  else if (m.x < a + b)
    moves.edge1 = GtArray{m.x + 1, m.y, m.z};
  return moves;
}

ColoredDigraph gt_crystal(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("parameters must be >= 0");
  const auto arrays = gt_arrays(a, b);
  ColoredDigraph::Builder bld;
  for (const GtArray& m : arrays) bld.add_vertex(gt_name(m));
  for (const GtArray& m : arrays) {
    const GtMoves moves = gt_moves(a, b, m);
    if (moves.edge1) bld.add_edge(gt_name(m), gt_name(*moves.edge1), 1);
    if (moves.edge2) bld.add_edge(gt_name(m), gt_name(*moves.edge2), 2);
  }
  return bld.build();
}

IsoResult check_isomorphism(const ColoredDigraph& g, const ColoredDigraph& h) {
  if (g.vertex_count() != h.vertex_count())
    return {std::nullopt, "vertex counts differ"};
  const auto gs = g.sources();
  const auto hs = h.sources();
  if (gs.size() != 1 || hs.size() != 1)
    return {std::nullopt, "both graphs must have a unique source"};

  std::vector<Vertex> map(g.vertex_count(), kNoVertex);
  std::vector<char> used(h.vertex_count(), 0);
  map[gs[0]] = hs[0];
  used[hs[0]] = 1;
  std::vector<Vertex> queue{gs[0]};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vertex v = queue[k];
    const Vertex w = map[v];
    for (int c : {1, 2}) {
      auto gv = g.succ(v, c);
      auto hw = h.succ(w, c);
      if (gv.has_value() != hw.has_value())
        return {std::nullopt, "color-" + std::to_string(c) +
                                  " out-degree differs at '" + g.name(v) +
                                  "' vs '" + h.name(w) + "'"};
      if (!gv) continue;
      if (map[*gv] == kNoVertex) {
        if (used[*hw])
          return {std::nullopt,
                  "'" + h.name(*hw) + "' would be matched twice"};
        map[*gv] = *hw;
        used[*hw] = 1;
        queue.push_back(*gv);
      } else if (map[*gv] != *hw) {
        return {std::nullopt, "edges disagree at '" + g.name(v) + "'"};
      }
    }
  }
  if (queue.size() != g.vertex_count())
    return {std::nullopt, "source does not reach every vertex"};
  return {std::move(map), ""};
}

}  // namespace crystal
