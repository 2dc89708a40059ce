// SPDX-License-Identifier: Apache-2.0
#include "crystal/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crystal/build.hpp"
#include "crystal/cone.hpp"
#include "crystal/decomposition.hpp"
#include "crystal/reach.hpp"

namespace crystal::verify {

namespace {

std::string at(const ColoredDigraph& g, Vertex v) {
  return "'" + g.name(v) + "'";
}

std::string edge_str(const ColoredDigraph& g, const Edge& e) {
  return "(" + g.name(e.tail) + " -> " + g.name(e.head) + ", color " +
         std::to_string(e.color) + ")";
}

}  // namespace

Issue counts(int a, int b) {
  const ColoredDigraph g = build_rc(a, b);
  const CrystalAnalysis an(g);
  if (!an.lengths_ok()) return std::string("line analysis failed on K(a,b)");
  const long long want_vertices = rc_vertex_count(a, b);
  if (static_cast<long long>(g.vertex_count()) != want_vertices)
    return "vertex count " + std::to_string(g.vertex_count()) + " != " +
           std::to_string(want_vertices);
  const long long want_crit = static_cast<long long>(a + 1) * (b + 1);
  if (static_cast<long long>(an.critical_vertices().size()) != want_crit)
    return "critical count " + std::to_string(an.critical_vertices().size()) +
           " != " + std::to_string(want_crit);
  const long long want_edges =
      static_cast<long long>(a + 1) * (b + 1) * (a + b) / 2;
  for (int c : {1, 2})
    if (static_cast<long long>(g.edge_count(c)) != want_edges)
      return "color-" + std::to_string(c) + " edge count " +
             std::to_string(g.edge_count(c)) + " != " +
             std::to_string(want_edges);
  if (g.sources().size() != 1) return std::string("source is not unique");
  if (g.sinks().size() != 1) return std::string("sink is not unique");
  const LengthTuple want{0, b, 0, a};
  if (!(an.tuple(g.sources()[0]) == want))
    return std::string("source length tuple is not (0,b,0,a)");
  return std::nullopt;
}

Issue vertex_count_vs_product(int a, int b) {
  const ColoredDigraph left = build_left_sail(a);
  const ColoredDigraph right = build_right_sail(b);
  const auto s = sail_diagonal(a);
  const auto t = sail_diagonal(b);
  const long long expect =
      static_cast<long long>(left.vertex_count()) * t.size() +
      static_cast<long long>(right.vertex_count()) * s.size() -
      static_cast<long long>(s.size()) * t.size();
  if (expect != rc_vertex_count(a, b))
    return "glue cardinality " + std::to_string(expect) +
           " != closed form " + std::to_string(rc_vertex_count(a, b));
  const ColoredDigraph k = build_rc(a, b);
  if (static_cast<long long>(k.vertex_count()) != expect)
    return "K(a,b) has " + std::to_string(k.vertex_count()) +
           " vertices, gluing predicts " + std::to_string(expect);
  const ColoredDigraph glued = diagonal_product(left, s, right, t);
  if (static_cast<long long>(glued.vertex_count()) != expect)
    return std::string("diagonal product vertex count off");
  const long long expect_edges =
      static_cast<long long>(left.edge_count()) * t.size() +
      static_cast<long long>(right.edge_count()) * s.size();
  if (static_cast<long long>(glued.edge_count()) != expect_edges)
    return std::string("diagonal product edge count off");
  return std::nullopt;
}

Issue degree_bounds(const ColoredDigraph& g) {
  std::map<std::pair<Vertex, int>, int> out, in;
  std::set<std::tuple<Vertex, Vertex, int>> seen;
  for (const Edge& e : g.edges()) {
    if (!seen.insert({e.tail, e.head, e.color}).second)
      return "duplicate edge " + edge_str(g, e);
    if (++out[{e.tail, e.color}] > 1)
      return "two outgoing color-" + std::to_string(e.color) + " edges at " +
             at(g, e.tail);
    if (++in[{e.head, e.color}] > 1)
      return "two incoming color-" + std::to_string(e.color) + " edges at " +
             at(g, e.head);
  }
  return std::nullopt;
}

Issue acyclicity(const ColoredDigraph& g) {
  try {
    topological_order(g);
  } catch (const std::invalid_argument& err) {
    return std::string(err.what());
  }
  return std::nullopt;
}

Issue classifies_rc(const ColoredDigraph& g) {
  const Classification cls = classify(g);
  if (cls.verdict == Verdict::RC) return std::nullopt;
  std::string msg = "classified " + std::string(verdict_name(cls.verdict));
  if (cls.witness) msg += " (" + cls.witness->kind + ": " + cls.witness->detail + ")";
  return msg;
}

Issue grading_two_paths(const ColoredDigraph& g) {
  const auto order = topological_order(g);
  const std::size_t n = g.vertex_count();
  using Count = std::pair<int, int>;
  std::vector<std::set<Count>> sets(n);
  for (Vertex s = 0; s < n; ++s) {
    for (auto& set : sets) set.clear();
    sets[s].insert({0, 0});
    for (Vertex v : order) {
      if (sets[v].empty()) continue;
      for (int c : {1, 2}) {
        auto w = g.succ(v, c);
        if (!w) continue;
        for (const Count& cnt : sets[v])
          sets[*w].insert(c == 1 ? Count{cnt.first + 1, cnt.second}
                                 : Count{cnt.first, cnt.second + 1});
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (sets[v].size() > 1)
        return "paths from " + at(g, s) + " to " + at(g, v) +
               " differ in per-color edge counts";
  }
  return std::nullopt;
}

Issue sigma_steps(const ColoredDigraph& g, const CrystalAnalysis& an) {
  for (const Edge& e : g.edges()) {
    const auto su = an.tuple(e.tail).sigma();
    const auto sv = an.tuple(e.head).sigma();
    const std::pair<int, int> diff{sv.first - su.first, sv.second - su.second};
    const std::pair<int, int> want =
        e.color == 1 ? std::pair<int, int>{-2, 1} : std::pair<int, int>{1, -2};
    if (diff != want) return "sigma step wrong across " + edge_str(g, e);
  }
  return std::nullopt;
}

Issue labels_monotone(const ColoredDigraph& g, const CrystalAnalysis& an) {
  for (int c : {1, 2}) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.pred(v, c)) continue;  // walk each line once, from its start
      const auto line = an.line(v, c);
      int prev = -1;
      for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        const int l = an.label(line[i], c);
        if (l < prev)
          return "labels decrease along the color-" + std::to_string(c) +
                 " line through " + at(g, v);
        prev = l;
      }
    }
  }
  return std::nullopt;
}

Issue label_neighbor_rule(const ColoredDigraph& g, const CrystalAnalysis& an) {
  for (const Edge& e : g.edges()) {
    const int o = other_color(e.color);
    if (an.label(e) == 0) {
      auto w = g.pred(e.tail, o);
      if (!w || an.label(*w, o) != 1)
        return "0-labeled " + edge_str(g, e) +
               " lacks an incoming 1-labeled edge of the other color";
    } else {
      auto w = g.succ(e.head, o);
      if (!w || an.label(e.head, o) != 0)
        return "1-labeled " + edge_str(g, e) +
               " lacks an outgoing 0-labeled edge of the other color";
    }
  }
  return std::nullopt;
}

Issue square_completion(const ColoredDigraph& g, const CrystalAnalysis& an) {
  for (const Edge& e : g.edges()) {
    const int c = e.color;
    const int o = other_color(c);
    const Vertex u = e.tail, v = e.head;
    if (an.label(e) == 0 && an.tuple(v).head_len(o) > 0) {
      auto u2 = g.succ(u, o), v2 = g.succ(v, o);
      if (!u2 || !v2 || an.label(u, o) != 1 || an.label(v, o) != 1)
        return "missing 1-labeled side edges above " + edge_str(g, e);
      if (g.succ(*u2, c) != v2 || an.label(*u2, c) != 0)
        return "square above " + edge_str(g, e) + " does not close";
      auto v3 = g.succ(*v2, c);
      if (!v3 || an.label(*v2, c) != 0)
        return "0-run above " + edge_str(g, e) + " does not extend";
    }
    if (an.label(e) == 1 && an.tuple(u).tail_len(o) > 0) {
      auto u2 = g.pred(u, o), v2 = g.pred(v, o);
      if (!u2 || !v2 || an.label(*u2, o) != 0 || an.label(*v2, o) != 0)
        return "missing 0-labeled side edges below " + edge_str(g, e);
      if (g.succ(*u2, c) != v2 || an.label(*u2, c) != 1)
        return "square below " + edge_str(g, e) + " does not close";
      auto u3 = g.pred(*u2, c);
      if (!u3 || an.label(*u3, c) != 1)
        return "1-run below " + edge_str(g, e) + " does not extend";
    }
  }
  return std::nullopt;
}

Issue edge_deletion_sensitivity(const ColoredDigraph& g, bool parallel) {
  const auto edges = g.edges();
  const std::int64_t m = static_cast<std::int64_t>(edges.size());
  auto deletion_is_rc = [&](std::int64_t skip) {
    ColoredDigraph::Builder b;
    for (Vertex v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.name(v));
    for (std::int64_t k = 0; k < m; ++k)
      if (k != skip) b.add_edge(edges[k].tail, edges[k].head, edges[k].color);
    return classify(b.build()).verdict == Verdict::RC;
  };
  std::int64_t bad = m;
  if (!parallel) {
    for (std::int64_t k = 0; k < m && bad == m; ++k)
      if (deletion_is_rc(k)) bad = k;
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < m; ++k) {
      if (!deletion_is_rc(k)) continue;
#pragma omp critical
      bad = std::min(bad, k);
    }
  }
  if (bad != m)
    return "deleting " + edge_str(g, edges[bad]) + " still classifies RC";
  return std::nullopt;
}

Issue dual_properties(const ColoredDigraph& g, const CrystalAnalysis& an) {
  const ColoredDigraph d = dualize(g);
  const CrystalAnalysis dan(d);
  if (dan.verdict() != Verdict::RC)
    return std::string("dual graph is not RC");
  for (const Edge& e : g.edges())
    if (an.label(e) + dan.label(Edge{e.head, e.tail, e.color}) != 1)
      return "label did not flip across " + edge_str(g, e);
  const auto [a, b] = an.params();
  const auto [da, db] = dan.params();
  if (da != b || db != a) return std::string("dual parameters are not swapped");
  const ColoredDigraph dd = dualize(d);
  if (!std::equal(g.edges().begin(), g.edges().end(), dd.edges().begin(),
                  dd.edges().end()))
    return std::string("dualize is not an involution");
  auto iso = check_isomorphism(d, build_rc(b, a));
  if (!iso.map) return "dual not isomorphic to K(b,a): " + iso.mismatch;
  return std::nullopt;
}

Issue decomposition_roundtrip(const ColoredDigraph& g,
                              const CrystalAnalysis& an) {
  const auto [a, b] = an.params();
  const SailDecomposition dec = decompose(g, an);
  if (static_cast<int>(dec.left_sails.size()) != b + 1 ||
      static_cast<int>(dec.right_sails.size()) != a + 1)
    return std::string("unexpected sail counts");
  if (dec.a != a || dec.b != b) return std::string("unexpected sail sizes");
  const ExtractedSail l0 = extract_sail(g, an, dec.left_sails[0]);
  const ExtractedSail r0 = extract_sail(g, an, dec.right_sails[0]);
  if (!check_isomorphism(l0.graph, build_left_sail(a)).map)
    return std::string("extracted left sail is not a half-grid");
  if (!check_isomorphism(r0.graph, build_right_sail(b)).map)
    return std::string("extracted right sail is not a half-grid");
  const ColoredDigraph glued =
      diagonal_product(l0.graph, l0.diagonal, r0.graph, r0.diagonal);
  auto iso = check_isomorphism(g, glued);
  if (!iso.map) return "re-glued sails differ from the original: " + iso.mismatch;
  return std::nullopt;
}

Issue eps_delta_relations(const ColoredDigraph& g, const CrystalAnalysis& an) {
  const auto [a, b] = an.params();
  const SailDecomposition dec = decompose(g, an);
  const Embedding emb(g, an);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const EpsDelta ed = emb.eps_delta(v);
    if (an.is_critical(v) != (ed.eps == 0 && ed.delta == 0))
      return "criticality does not match eps=delta=0 at " + at(g, v);
    const LengthTuple& t = an.tuple(v);
    if (const auto& l = dec.left_of[v]) {
      if (ed.eps < 0 || ed.delta != -2 * ed.eps)
        return "left-sail relation eps>=0, delta=-2*eps fails at " + at(g, v);
      if (l->p != t.t1 || l->q != a - t.h2)
        return "left-sail coordinates are not (t1, a-h2) at " + at(g, v);
      if (l->sail != t.t2 - ed.eps || l->sail != b - t.h1 + ed.eps)
        return "left-sail index formula fails at " + at(g, v);
    }
    if (const auto& r = dec.right_of[v]) {
      if (ed.delta < 0 || ed.eps != -2 * ed.delta)
        return "right-sail relation delta>=0, eps=-2*delta fails at " + at(g, v);
      if (r->p != b - t.h1 || r->q != t.t2)
        return "right-sail coordinates are not (b-h1, t2) at " + at(g, v);
      if (r->sail != t.t1 - ed.delta || r->sail != a - t.h2 + ed.delta)
        return "right-sail index formula fails at " + at(g, v);
    }
  }
  return std::nullopt;
}

Issue grading_bounds(const CrystalAnalysis& an, const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Grading& gr = emb.grading(v);
    if (!(0 <= gr.alpha0 && gr.alpha0 <= gr.beta1 && gr.beta1 <= emb.a()))
      return "0 <= alpha0 <= beta1 <= a fails at " + at(g, v);
    if (!(0 <= gr.beta0 && gr.beta0 <= gr.alpha1 && gr.alpha1 <= emb.b()))
      return "0 <= beta0 <= alpha1 <= b fails at " + at(g, v);
    const bool e1 = gr.alpha0 == gr.beta1;
    const bool e2 = gr.beta0 == gr.alpha1;
    if (!e1 && !e2) return "neither grading equality holds at " + at(g, v);
    if ((e1 && e2) != an.is_critical(v))
      return "both equalities must mark exactly the criticals; fails at " +
             at(g, v);
  }
  return std::nullopt;
}

Issue grading_realizability(const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  std::map<std::array<int, 4>, int> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    ++seen[emb.grading(v).as_array()];
  long long quadruples = 0;
  for (int p = 0; p <= emb.a(); ++p)
    for (int q = p; q <= emb.a(); ++q)
      for (int q2 = 0; q2 <= emb.b(); ++q2)
        for (int p2 = q2; p2 <= emb.b(); ++p2) {
          if (p != q && p2 != q2) continue;
          ++quadruples;
          const std::array<int, 4> key{p, p2, q2, q};
          auto it = seen.find(key);
          if (it == seen.end() || it->second != 1)
            return "quadruple (alpha0,alpha1,beta0,beta1)=(" +
                   std::to_string(p) + "," + std::to_string(p2) + "," +
                   std::to_string(q2) + "," + std::to_string(q) +
                   ") is not realized exactly once";
        }
  if (quadruples != static_cast<long long>(g.vertex_count()))
    return std::string("admissible quadruples do not count the vertices");
  return std::nullopt;
}

Issue rho_injective(const Embedding& emb) {
  const std::size_t n = emb.graph().vertex_count();
  std::set<Point3> rho, rho_prime;
  for (Vertex v = 0; v < n; ++v) {
    rho.insert(emb.rho(v));
    rho_prime.insert(emb.rho_prime(v));
  }
  if (rho.size() != n) return std::string("rho is not injective");
  if (rho_prime.size() != n) return std::string("rho' is not injective");
  return std::nullopt;
}

Issue restore_roundtrip(const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Grading& gr = emb.grading(v);
    if (restore_beta(emb.rho(v)) != std::pair<int, int>{gr.beta0, gr.beta1})
      return "beta split not restored at " + at(g, v);
    if (restore_alpha(emb.rho_prime(v)) !=
        std::pair<int, int>{gr.alpha0, gr.alpha1})
      return "alpha split not restored at " + at(g, v);
  }
  return std::nullopt;
}

Issue polytope_points(const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  std::set<Point3> image;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Point3 p = emb.rho(v);
    image.insert(p);
    if (!polytope_contains(emb.a(), emb.b(),
                           {Rational(p[0]), Rational(p[1]), Rational(p[2])}))
      return "rho image outside the polytope at " + at(g, v);
    const Point3 q = emb.rho_prime(v);
    if (!polytope_prime_contains(
            emb.a(), emb.b(), {Rational(q[0]), Rational(q[1]), Rational(q[2])}))
      return "rho' image outside the image polytope at " + at(g, v);
  }
  const auto pts = polytope_integer_points(emb.a(), emb.b());
  if (image.size() != g.vertex_count() ||
      std::set<Point3>(pts.begin(), pts.end()) != image)
    return std::string("integer points of the polytope differ from rho(V)");
  return std::nullopt;
}

namespace {

// Exact rank of up to a handful of integer vectors in Z^3.
int rank3(const std::vector<std::array<long long, 3>>& rows) {
  auto det = [](const std::array<long long, 3>& r0,
                const std::array<long long, 3>& r1,
                const std::array<long long, 3>& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
           r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
  };
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (det(rows[i], rows[j], rows[k]) != 0) return 3;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto &x = rows[i], &y = rows[j];
      if (x[1] * y[2] != x[2] * y[1] || x[2] * y[0] != x[0] * y[2] ||
          x[0] * y[1] != x[1] * y[0])
        return 2;
    }
  for (const auto& r : rows)
    if (r[0] || r[1] || r[2]) return 1;
  return 0;
}

}  // namespace

Issue polytope_vertex_list(int a, int b) {
  std::set<Point3> candidates;
  for (const Point3& p : polytope_integer_points(a, b)) {
    std::vector<std::array<long long, 3>> active;
    if (p[0] == 0 || p[0] == a) active.push_back({1, 0, 0});
    if (p[1] == 0 || p[1] == b) active.push_back({0, 1, 0});
    if (p[2] == p[0]) active.push_back({1, 0, -1});
    if (p[2] == p[1] + a) active.push_back({0, 1, -1});
    if (rank3(active) == 3) candidates.insert(p);
  }
  const auto listed = polytope_vertices(a, b);
  if (candidates != std::set<Point3>(listed.begin(), listed.end()))
    return std::string("polytope vertices differ from the expected seven");
  return std::nullopt;
}

Issue omega_properties(const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  const int a = emb.a(), b = emb.b();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (omega_point(emb.rho(v)) != emb.rho_prime(v))
      return "rho' != omega(rho) at " + at(g, v);
  std::set<Point3> prime_points;
  for (int b0 = 0; b0 <= b; ++b0)
    for (int b1 = 0; b1 <= a; ++b1)
      for (int alpha = b0; alpha <= b1 + b; ++alpha)
        prime_points.insert({alpha, b0, b1});
  std::set<Point3> image;
  for (const Point3& p : polytope_integer_points(a, b))
    image.insert(omega_point(p));
  if (image.size() != polytope_integer_points(a, b).size() ||
      image != prime_points)
    return std::string(
        "omega is not a bijection between the integer points of the two "
        "polytopes");
  const auto verts = polytope_vertices(a, b);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j) {
      RPoint3 mid{Rational(verts[i][0] + verts[j][0], 2),
                  Rational(verts[i][1] + verts[j][1], 2),
                  Rational(verts[i][2] + verts[j][2], 2)};
      if (!polytope_contains(a, b, mid))
        return std::string("vertex midpoint escapes the polytope");
      if (!polytope_prime_contains(a, b, omega(mid)))
        return std::string("omega image of a rational point escapes");
    }
  return std::nullopt;
}

Issue gt_shift_conjugation(int a, int b) {
  const auto arrays = gt_arrays(a, b);
  const auto target_list = gt_arrays(b, a);
  const std::set<GtArray> target(target_list.begin(), target_list.end());
  std::set<GtArray> image;
  for (const GtArray& m : arrays) {
    const GtArray w = omega_tilde(a, b, m);
    const Point3 om = omega_point({m.z, m.x - a, m.y});
    const GtArray via_omega{om[2] + b, om[0], om[1]};
    if (w != via_omega)
      return "omega_tilde disagrees with the shifted omega at " + gt_name(m);
    if (!gt_valid(b, a, w))
      return "omega_tilde image outside border at " + gt_name(m);
    image.insert(w);
  }
  if (image.size() != arrays.size() || image != target)
    return std::string("omega_tilde is not a bijection onto the target border");
  return std::nullopt;
}

Issue critical_section(const CrystalAnalysis& an, const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Grading& gr = emb.grading(v);
    if ((gr.beta() == gr.alpha()) != an.is_critical(v))
      return "beta = alpha0+alpha1 must cut out the criticals; fails at " +
             at(g, v);
  }
  return std::nullopt;
}

Issue rho_edge_steps(const ColoredDigraph& g, const CrystalAnalysis& an,
                     const Embedding& emb) {
  for (const Edge& e : g.edges()) {
    const Point3 pu = emb.rho(e.tail);
    const Point3 pv = emb.rho(e.head);
    const Point3 diff{pv[0] - pu[0], pv[1] - pu[1], pv[2] - pu[2]};
    Point3 want{0, 0, 1};
    if (e.color == 1)
      want = an.label(e) == 0 ? Point3{1, 0, 0} : Point3{0, 1, 0};
    if (diff != want) return "rho step wrong across " + edge_str(g, e);
  }
  return std::nullopt;
}

Issue gt_isomorphism(int a, int b) {
  const ColoredDigraph g = build_rc(a, b);
  const ColoredDigraph h = gt_crystal(a, b);
  if (static_cast<long long>(h.vertex_count()) != rc_vertex_count(a, b))
    return std::string("array count differs from the vertex count");
  if (classify(h).verdict != Verdict::RC)
    return std::string("array crystal does not classify RC");
  auto iso = check_isomorphism(g, h);
  if (!iso.map) return "not isomorphic: " + iso.mismatch;
  return std::nullopt;
}

Issue gt_roundtrip(const Embedding& emb) {
  const ColoredDigraph& g = emb.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto back = emb.from_gt(emb.to_gt(v));
    if (!back || *back != v) return "array round trip fails at " + at(g, v);
  }
  for (const GtArray& m : gt_arrays(emb.a(), emb.b())) {
    auto v = emb.from_gt(m);
    if (!v || !(emb.to_gt(*v) == m))
      return "vertex round trip fails at array " + gt_name(m);
  }
  return std::nullopt;
}

Issue order_formula_matches_reachability(const PosetView& view) {
  const ColoredDigraph& g = view.graph();
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (view.leq(u, v) != view.reachable(u, v))
        return "order formula and reachability disagree on (" + g.name(u) +
               ", " + g.name(v) + ")";
  return std::nullopt;
}

Issue join_meet_against_oracle(const PosetView& view, bool parallel) {
  return parallel ? verify_lattice_pairs_parallel(view)
                  : verify_lattice_pairs_serial(view);
}

Issue lattice_laws(const PosetView& view) {
  const ColoredDigraph& g = view.graph();
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    if (view.join(u, u) != u || view.meet(u, u) != u)
      return "idempotence fails at " + at(g, u);
    for (Vertex v = 0; v < n; ++v) {
      if (view.join(u, v) != view.join(v, u) ||
          view.meet(u, v) != view.meet(v, u))
        return "commutativity fails at (" + g.name(u) + ", " + g.name(v) + ")";
      if (view.join(u, view.meet(u, v)) != u ||
          view.meet(u, view.join(u, v)) != u)
        return "absorption fails at (" + g.name(u) + ", " + g.name(v) + ")";
    }
  }
  if (n <= 150) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
          if (view.join(view.join(u, v), w) != view.join(u, view.join(v, w)))
            return "join associativity fails at (" + g.name(u) + ", " +
                   g.name(v) + ", " + g.name(w) + ")";
          if (view.meet(view.meet(u, v), w) != view.meet(u, view.meet(v, w)))
            return "meet associativity fails at (" + g.name(u) + ", " +
                   g.name(v) + ", " + g.name(w) + ")";
        }
  }
  return std::nullopt;
}

Issue sail_bound_compatibility(const PosetView& view) {
  const ColoredDigraph& g = view.graph();
  const auto& dec = view.decomposition();
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      const bool share =
          (dec.left_of[u] && dec.left_of[v] &&
           dec.left_of[u]->sail == dec.left_of[v]->sail) ||
          (dec.right_of[u] && dec.right_of[v] &&
           dec.right_of[u]->sail == dec.right_of[v]->sail);
      if (!share) continue;
      const Vertex w = view.join(u, v);
      if (view.sail_min_above(w) !=
          view.join(view.sail_min_above(u), view.sail_min_above(v)))
        return "min-above incompatible with join at (" + g.name(u) + ", " +
               g.name(v) + ")";
      if (view.sail_max_below(w) !=
          view.join(view.sail_max_below(u), view.sail_max_below(v)))
        return "max-below incompatible with join at (" + g.name(u) + ", " +
               g.name(v) + ")";
    }
  return std::nullopt;
}

Issue nondistributivity_witness(const PosetView& view) {
  const Vertex n = static_cast<Vertex>(view.graph().vertex_count());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        if (view.meet(x, view.join(y, z)) !=
            view.join(view.meet(x, y), view.meet(x, z)))
          return std::nullopt;
  return std::string("no non-distributive triple found");
}

Issue cone_roundtrip(const ColoredDigraph& g, const CrystalAnalysis& an) {
  const auto [a, b] = an.params();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const ConePoint p = cone_encode(an, v);
    if (!cone_valid(p))
      return "encoded point " + cone_str(p) + " leaves the cone at " + at(g, v);
    const ConeDecoded back = cone_decode_name(p);
    if (back.a != a || back.b != b || back.vertex_name != g.name(v))
      return "decode(encode) is not the identity at " + at(g, v);
  }
  return std::nullopt;
}

Issue cone_tuple_roundtrip(int bound) {
  UniversalCone cone;
  for (long long len = 0; len <= bound; ++len)
    for (long long pos = 0; pos <= len; ++pos)
      for (long long crit = 0; crit <= len; ++crit)
        for (long long down = 0; down <= bound; ++down)
          for (long long up = 0; up <= bound; ++up) {
            const ConePoint p{len, pos, crit, down, up};
            const auto decoded = cone.decode(p);
            const ConePoint back =
                cone.encode(decoded.a, decoded.b, decoded.vertex_name);
            if (!(back == p))
              return "encode(decode) is not the identity at " + cone_str(p);
          }
  return std::nullopt;
}

Issue cone_operators(const ColoredDigraph& g, const CrystalAnalysis& an) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const ConePoint p = cone_encode(an, v);
    for (int c : {1, 2}) {
      const auto w = g.succ(v, c);
      const auto fp = c == 1 ? cone_f1(p) : cone_f2(p);
      if (w.has_value() != fp.has_value())
        return "operator applicability differs from the graph at " + at(g, v) +
               " color " + std::to_string(c);
      if (!w) continue;
      if (!cone_valid(*fp))
        return "operator image leaves the cone at " + at(g, v);
      if (!(*fp == cone_encode(an, *w)))
        return "operator disagrees with the edge at " + at(g, v) + " color " +
               std::to_string(c);
    }
  }
  return std::nullopt;
}

Issue cone_generators() {
  const ConePoint P{0, 0, 0, 0, 1}, Q{1, 0, 1, 0, 0}, R{1, 1, 1, 0, 0};
  const ConePoint S{1, 0, 0, 0, 0}, T{1, 1, 0, 0, 0}, W{0, 0, 0, 1, 0};
  UniversalCone cone;
  struct Named {
    const char* name;
    int a, b;
    const char* vertex;
    ConePoint want;
  };
  const Named table[] = {
      {"P", 1, 0, "L0(0,0)", P}, {"Q", 1, 0, "L0(0,1)", Q},
      {"R", 1, 0, "L0(1,1)", R}, {"S", 0, 1, "L0(0,0)", S},
      {"T", 0, 1, "R0(1,0)", T}, {"W", 0, 1, "L1(0,0)", W}};
  for (const Named& row : table)
    if (!(cone.encode(row.a, row.b, row.vertex) == row.want))
      return std::string("generator ") + row.name + " is not " +
             cone_str(row.want);
  if (!(cone_f1(Q) == std::optional<ConePoint>(R)))
    return std::string("f1 does not map the middle K(1,0) point to its sink");
  if (!(cone_f2(P) == std::optional<ConePoint>(Q)))
    return std::string("f2 does not map the K(1,0) source to its middle");
  if (!(cone_f1(S) == std::optional<ConePoint>(T)) ||
      !(cone_f2(T) == std::optional<ConePoint>(W)))
    return std::string("operators disagree on the K(0,1) chain");
  if (!(Q + T == R + S)) return std::string("Q+T != R+S");

  // Collisions among small nonnegative combinations must all come from
  // integer multiples of that single relation.
  const ConePoint gens[] = {P, Q, R, S, T, W};
  std::map<ConePoint, std::vector<std::array<int, 6>>> sums;
  std::array<int, 6> coeff{};
  const int kMax = 2;
  while (true) {
    ConePoint total{};
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < coeff[i]; ++k) total = total + gens[i];
    sums[total].push_back(coeff);
    int i = 0;
    while (i < 6 && coeff[i] == kMax) coeff[i++] = 0;
    if (i == 6) break;
    ++coeff[i];
  }
  for (const auto& [point, combos] : sums)
    for (std::size_t i = 0; i < combos.size(); ++i)
      for (std::size_t j = i + 1; j < combos.size(); ++j) {
        int d[6];
        for (int k = 0; k < 6; ++k) d[k] = combos[i][k] - combos[j][k];
        const int k = d[1];  // multiplicity of the Q+T = R+S exchange
        if (d[0] != 0 || d[5] != 0 || d[4] != k || d[2] != -k || d[3] != -k)
          return "unexpected relation between generator combinations at " +
                 cone_str(point);
      }
  return std::nullopt;
}

Issue cone_separation(int max_ab) {
  std::map<ConePoint, std::string> seen;
  for (int a = 0; a <= max_ab; ++a)
    for (int b = 0; b <= max_ab; ++b) {
      const ColoredDigraph g = build_rc(a, b);
      const CrystalAnalysis an(g);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const ConePoint p = cone_encode(an, v);
        const std::string where = "K(" + std::to_string(a) + "," +
                                  std::to_string(b) + "):" + g.name(v);
        auto [it, inserted] = seen.emplace(p, where);
        if (!inserted)
          return "cone point " + cone_str(p) + " shared by " + it->second +
                 " and " + where;
      }
    }
  return std::nullopt;
}

Issue cone_minkowski(int a, int b) {
  if (!minkowski_check(a, b))
    return "image of K(" + std::to_string(a) + "," + std::to_string(b) +
           ") is not the generator sumset";
  return std::nullopt;
}

ColoredDigraph two_source_fixture() {
  return doubled_swap(build_rc(1, 1), "L0(0,1)", "L0(1,1)", 1);
}

Issue two_source_fixture_properties() {
  const ColoredDigraph g = two_source_fixture();
  const Classification cls = classify(g);
  if (cls.verdict == Verdict::RC)
    return std::string("swap fixture must not classify RC");
  if (cls.verdict == Verdict::NotCrystal)
    return std::string("swap fixture should remain connected and path-clean");
  if (g.sources().size() != 2)
    return "swap fixture has " + std::to_string(g.sources().size()) +
           " sources, expected 2";
  if (is_lattice_bruteforce(g))
    return std::string("swap fixture must not be a lattice");
  return std::nullopt;
}

LongSquareScan long_square_scan(const ColoredDigraph& g,
                                const CrystalAnalysis& an) {
  if (!an.at_least(Verdict::WC))
    throw std::invalid_argument(
        "long-square scan needs a graph whose squares commute");
  auto walk = [&g](Vertex v, std::initializer_list<int> colors,
                   bool forward) -> std::optional<Vertex> {
    std::optional<Vertex> w = v;
    for (int c : colors) {
      w = forward ? g.succ(*w, c) : g.pred(*w, c);
      if (!w) return std::nullopt;
    }
    return w;
  };
  LongSquareScan scan;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.succ(v, 1) && g.succ(v, 2) && an.label(v, 1) == 1 &&
        an.label(v, 2) == 1) {
      const auto x = walk(v, {1, 2, 2, 1}, true);
      const auto y = walk(v, {2, 1, 1, 2}, true);
      if (!x || !y || *x != *y) scan.forward_violation = true;
    }
    const auto i1 = g.pred(v, 1);
    const auto i2 = g.pred(v, 2);
    if (i1 && i2 && an.label(*i1, 1) == 0 && an.label(*i2, 2) == 0) {
      const auto x = walk(v, {1, 2, 2, 1}, false);
      const auto y = walk(v, {2, 1, 1, 2}, false);
      if (!x || !y || *x != *y) scan.backward_violation = true;
    }
  }
  return scan;
}

std::vector<Check> run_all(int a, int b, const Options& opts) {
  std::vector<Check> out;
  auto guard = [](auto&& fn) -> Issue {
    try {
      return fn();
    } catch (const std::exception& err) {
      return std::string("exception: ") + err.what();
    }
  };
  auto add = [&](const char* name, auto&& fn) {
    out.push_back({name, guard(fn)});
  };

  add("counting_formulas", [&] { return counts(a, b); });
  add("vertex_count_product", [&] { return vertex_count_vs_product(a, b); });

  const ColoredDigraph g = build_rc(a, b);
  const CrystalAnalysis an(g);
  add("degree_bounds", [&] { return degree_bounds(g); });
  add("acyclicity", [&] { return acyclicity(g); });
  add("classifies_rc", [&] { return classifies_rc(g); });
  add("grading_two_paths", [&] { return grading_two_paths(g); });
  add("sigma_steps", [&] { return sigma_steps(g, an); });
  add("labels_monotone", [&] { return labels_monotone(g, an); });
  add("label_neighbor_rule", [&] { return label_neighbor_rule(g, an); });
  add("square_completion", [&] { return square_completion(g, an); });
  if (opts.mutations && a + b >= 1)
    add("edge_deletion_sensitivity",
        [&] { return edge_deletion_sensitivity(g, opts.parallel); });
  add("dual_properties", [&] { return dual_properties(g, an); });
  add("decomposition_roundtrip", [&] { return decomposition_roundtrip(g, an); });
  add("eps_delta_relations", [&] { return eps_delta_relations(g, an); });

  std::optional<Embedding> emb;
  add("embedding_construction", [&]() -> Issue {
    emb.emplace(g, an);
    return std::nullopt;
  });
  if (emb) {
    add("grading_bounds", [&] { return grading_bounds(an, *emb); });
    add("grading_realizability", [&] { return grading_realizability(*emb); });
    add("rho_injective", [&] { return rho_injective(*emb); });
    add("restore_roundtrip", [&] { return restore_roundtrip(*emb); });
    add("polytope_points", [&] { return polytope_points(*emb); });
    add("polytope_vertex_list", [&] { return polytope_vertex_list(a, b); });
    add("omega_properties", [&] { return omega_properties(*emb); });
    add("gt_shift_conjugation", [&] { return gt_shift_conjugation(a, b); });
    add("critical_section", [&] { return critical_section(an, *emb); });
    add("rho_edge_steps", [&] { return rho_edge_steps(g, an, *emb); });
    add("gt_isomorphism", [&] { return gt_isomorphism(a, b); });
    add("gt_roundtrip", [&] { return gt_roundtrip(*emb); });
  }

  std::optional<PosetView> view;
  add("poset_construction", [&]() -> Issue {
    view.emplace(g);
    return std::nullopt;
  });
  if (view) {
    add("order_formula", [&] { return order_formula_matches_reachability(*view); });
    add("join_meet_oracle",
        [&] { return join_meet_against_oracle(*view, opts.parallel); });
    add("lattice_laws", [&] { return lattice_laws(*view); });
    add("sail_bound_compatibility",
        [&] { return sail_bound_compatibility(*view); });
    if (a == 1 && b == 1)
      add("nondistributivity_witness",
          [&] { return nondistributivity_witness(*view); });
  }

  add("cone_roundtrip", [&] { return cone_roundtrip(g, an); });
  add("cone_operators", [&] { return cone_operators(g, an); });
  add("cone_generators", [&] { return cone_generators(); });
  add("cone_separation", [&] { return cone_separation(2); });
  add("cone_minkowski", [&] { return cone_minkowski(a, b); });
  add("two_source_fixture", [&] { return two_source_fixture_properties(); });
  return out;
}

}  // namespace crystal::verify
