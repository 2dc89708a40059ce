// SPDX-License-Identifier: Apache-2.0
#include "crystal/cone.hpp"

#include <set>

#include "crystal/build.hpp"

namespace crystal {

std::string cone_str(const ConePoint& p) {
  return "(" + std::to_string(p.len) + "," + std::to_string(p.pos) + "," +
         std::to_string(p.crit) + "," + std::to_string(p.down) + "," +
         std::to_string(p.up) + ")";
}

std::optional<ConePoint> cone_f1(const ConePoint& p) {
  if (p.pos >= p.len) return std::nullopt;
  return ConePoint{p.len, p.pos + 1, p.crit, p.down, p.up};
}

std::optional<ConePoint> cone_f2(const ConePoint& p) {
  if (p.pos <= p.crit) {
    if (p.up == 0) return std::nullopt;
    return ConePoint{p.len + 1, p.pos, p.crit + 1, p.down, p.up - 1};
  }
  return ConePoint{p.len - 1, p.pos - 1, p.crit, p.down + 1, p.up};
}

ConePoint cone_encode(const CrystalAnalysis& an, Vertex v) {
  const LengthTuple& t = an.tuple(v);
  const Vertex r = an.line_critical(v, 1);
  const LengthTuple& rt = an.tuple(r);
  return {t.t1 + t.h1, t.t1, rt.t1, rt.t2, rt.h2};
}

ConeDecoded cone_decode_name(const ConePoint& p) {
  if (!cone_valid(p))
    throw std::invalid_argument("cone point " + cone_str(p) +
                                " violates 0 <= pos,crit <= len");
  ConeDecoded out;
  out.a = static_cast<int>(p.crit + p.up);
  out.b = static_cast<int>(p.len - p.crit + p.down);
  // The line critical r has t1 = crit and t2 = down, i.e. it is the common
  // vertex of left sail L_down and right sail R_crit. Vertices before it on
  // the 1-line sit in that left sail, vertices after it in that right sail.
  if (p.pos <= p.crit) {
    out.vertex_name = sail_vertex_name(true, static_cast<int>(p.down),
                                       static_cast<int>(p.pos),
                                       static_cast<int>(p.crit));
  } else {
    out.vertex_name = sail_vertex_name(false, static_cast<int>(p.crit),
                                       static_cast<int>(p.pos - p.crit + p.down),
                                       static_cast<int>(p.down));
  }
  return out;
}

const UniversalCone::Entry& UniversalCone::entry(int a, int b) {
  std::scoped_lock lock(mu_);
  auto [it, inserted] = cache_.try_emplace({a, b});
  if (inserted) {
    it->second.graph = std::make_unique<ColoredDigraph>(build_rc(a, b));
    it->second.analysis = std::make_unique<CrystalAnalysis>(*it->second.graph);
  }
  return it->second;
}

const ColoredDigraph& UniversalCone::graph(int a, int b) {
  return *entry(a, b).graph;
}

const CrystalAnalysis& UniversalCone::analysis(int a, int b) {
  return *entry(a, b).analysis;
}

UniversalCone::Decoded UniversalCone::decode(const ConePoint& p) {
  ConeDecoded named = cone_decode_name(p);
  const ColoredDigraph& g = graph(named.a, named.b);
  return {named.a, named.b, g.vertex(named.vertex_name),
          std::move(named.vertex_name)};
}

ConePoint UniversalCone::encode(int a, int b, std::string_view vertex_name) {
  const Entry& e = entry(a, b);
  return cone_encode(*e.analysis, e.graph->vertex(vertex_name));
}

std::vector<ConePoint> cone_image(int a, int b) {
  const ColoredDigraph g = build_rc(a, b);
  const CrystalAnalysis an(g);
  std::vector<ConePoint> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out.push_back(cone_encode(an, v));
  return out;
}

bool minkowski_check(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("parameters must be >= 0");
  auto as_set = [](std::vector<ConePoint> pts) {
    return std::set<ConePoint>(pts.begin(), pts.end());
  };
  const std::set<ConePoint> gen_a = as_set(cone_image(1, 0));
  const std::set<ConePoint> gen_b = as_set(cone_image(0, 1));
  std::set<ConePoint> sum{ConePoint{}};
  auto accumulate = [&sum](const std::set<ConePoint>& gens, int copies) {
    for (int k = 0; k < copies; ++k) {
      std::set<ConePoint> next;
      for (const ConePoint& s : sum)
        for (const ConePoint& g : gens) next.insert(s + g);
      sum.swap(next);
    }
  };
  accumulate(gen_a, a);
  accumulate(gen_b, b);
  return sum == as_set(cone_image(a, b));
}

}  // namespace crystal
