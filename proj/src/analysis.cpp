// SPDX-License-Identifier: Apache-2.0
#include "crystal/analysis.hpp"

#include <algorithm>

namespace crystal {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotCrystal: return "NotCrystal";
    case Verdict::NC: return "NC";
    case Verdict::WC: return "WC";
    case Verdict::RC: return "RC";
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(std::string_view s) {
  if (s == "NotCrystal") return Verdict::NotCrystal;
  if (s == "NC") return Verdict::NC;
  if (s == "WC") return Verdict::WC;
  if (s == "RC") return Verdict::RC;
  return std::nullopt;
}

namespace {

struct LineIssue {
  bool bad = false;
  Edge edge;
  std::string why;
};

std::optional<Vertex> first_unreached(const ColoredDigraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int c : {1, 2}) {
      if (auto w = g.succ(v, c); w && !seen[*w]) seen[*w] = 1, stack.push_back(*w);
      if (auto w = g.pred(v, c); w && !seen[*w]) seen[*w] = 1, stack.push_back(*w);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) return v;
  return std::nullopt;
}

}  // namespace

CrystalAnalysis::CrystalAnalysis(const ColoredDigraph& g) : g_(&g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    cls_ = {Verdict::NotCrystal,
            Witness{"connectivity", "graph has no vertices", {}, {}}};
    return;
  }

  auto unreached = first_unreached(g);
  connected_ = !unreached.has_value();

  // Monochromatic structure: every component of each color must be a finite
  // simple directed path. With the degree bounds already enforced by the
  // graph type, the only possible failure is a cycle.
  std::optional<Witness> cycle_witness;
  for (int c = 1; c <= 2; ++c) {
    auto& line_of = line_of_[c - 1];
    auto& lines = lines_[c - 1];
    line_of.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (g.pred(v, c)) continue;  // not the first vertex of its line
      std::vector<Vertex> path;
      for (std::optional<Vertex> w = v; w; w = g.succ(*w, c)) {
        line_of[*w] = static_cast<int>(lines.size());
        path.push_back(*w);
      }
      lines.push_back(std::move(path));
    }
    if (cycle_witness) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (line_of[v] >= 0) continue;
      Witness w;
      w.kind = "paths";
      w.detail = "monochromatic cycle of color " + std::to_string(c);
      Vertex u = v;
      do {
        w.vertices.push_back(u);
        u = *g.succ(u, c);
      } while (u != v);
      cycle_witness = std::move(w);
      break;
    }
  }
  paths_ok_ = !cycle_witness.has_value();

  std::optional<Witness> length_witness;
  if (paths_ok_) {
    tuples_.resize(n);
    for (int c = 1; c <= 2; ++c) {
      for (const auto& ln : lines_[c - 1]) {
        const int len = static_cast<int>(ln.size()) - 1;
        for (int i = 0; i <= len; ++i) {
          LengthTuple& t = tuples_[ln[i]];
          if (c == 1) {
            t.t1 = i;
            t.h1 = len - i;
          } else {
            t.t2 = i;
            t.h2 = len - i;
          }
        }
      }
    }

    for (int c = 1; c <= 2; ++c) {
      auto& lbl = out_label_[c - 1];
      lbl.assign(n, -1);
      for (Vertex v = 0; v < n; ++v) {
        if (auto w = g.succ(v, c)) {
          int o = other_color(c);
          lbl[v] = tuples_[v].head_len(o) == tuples_[*w].head_len(o) ? 0 : 1;
        }
      }
    }

    // Each line must change the opposite-color lengths as t-1/h= up to a
    // unique switch vertex and as t=/h+1 after it.
    std::vector<LineIssue> issues[2];
    for (int c = 1; c <= 2; ++c) {
      const int o = other_color(c);
      auto& lines = lines_[c - 1];
      auto& crit = line_crit_[c - 1];
      issues[c - 1].resize(lines.size());
      crit.assign(lines.size(), kNoVertex);
      for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& ln = lines[li];
        LineIssue& issue = issues[c - 1][li];
        int first_up = -1;
        for (std::size_t i = 0; i + 1 < ln.size(); ++i) {
          const LengthTuple& tu = tuples_[ln[i]];
          const LengthTuple& tv = tuples_[ln[i + 1]];
          const int dt = tv.tail_len(o) - tu.tail_len(o);
          const int dh = tv.head_len(o) - tu.head_len(o);
          const bool down = dt == -1 && dh == 0;
          const bool up = dt == 0 && dh == 1;
          Edge e{ln[i], ln[i + 1], c};
          if (!down && !up) {
            issue = {true, e,
                     "opposite-color lengths change by (" + std::to_string(dt) +
                         "," + std::to_string(dh) + ") across the edge"};
            break;
          }
          if (up && first_up < 0) first_up = static_cast<int>(i);
          if (down && first_up >= 0) {
            issue = {true, e, "line has no unique switch vertex"};
            break;
          }
        }
        if (!issue.bad)
          crit[li] = first_up < 0 ? ln.back() : ln[first_up];
      }
    }
    // Report the violation seen first in vertex-id order.
    for (Vertex v = 0; v < n && !length_witness; ++v) {
      for (int c = 1; c <= 2 && !length_witness; ++c) {
        const LineIssue& issue = issues[c - 1][line_of_[c - 1][v]];
        if (issue.bad)
          length_witness =
              Witness{"lengths", issue.why, {issue.edge.tail, issue.edge.head},
                      {issue.edge}};
      }
    }
    lengths_ok_ = !length_witness.has_value();
  }

  if (lengths_ok_) {
    for (int c = 1; c <= 2; ++c) {
      auto& flag = critical_flag_[c - 1];
      flag.assign(n, 0);
      for (Vertex v = 0; v < n; ++v)
        flag[v] = line_crit_[c - 1][line_of_[c - 1][v]] == v;
    }
    crit_consistent_ = true;
    for (Vertex v = 0; v < n; ++v) {
      if (critical_flag_[0][v] != critical_flag_[1][v]) crit_consistent_ = false;
      if (critical_flag_[0][v] || critical_flag_[1][v]) criticals_.push_back(v);
    }
  }

  // Local commuting squares: a vertex with a mixed-label pair of outgoing
  // edges must close a square, and dually for incoming pairs.
  std::optional<Witness> square;
  if (connected_ && lengths_ok_) {
    for (Vertex v = 0; v < n && !square; ++v) {
      auto o1 = g.succ(v, 1), o2 = g.succ(v, 2);
      if (o1 && o2) {
        int l1 = out_label_[0][v], l2 = out_label_[1][v];
        if (l1 == 0 && l2 == 0) {
          square = Witness{"square_out",
                           "two outgoing edges labeled 0",
                           {v},
                           {Edge{v, *o1, 1}, Edge{v, *o2, 2}}};
        } else if (l1 == 0 || l2 == 0) {
          auto w1 = g.succ(*o1, 2), w2 = g.succ(*o2, 1);
          if (!w1 || !w2 || *w1 != *w2)
            square = Witness{"square_out",
                             "outgoing mixed-label pair does not close a square",
                             {v},
                             {Edge{v, *o1, 1}, Edge{v, *o2, 2}}};
        }
      }
      if (square) break;
      auto i1 = g.pred(v, 1), i2 = g.pred(v, 2);
      if (i1 && i2) {
        int l1 = out_label_[0][*i1], l2 = out_label_[1][*i2];
        if (l1 == 1 && l2 == 1) {
          square = Witness{"square_in",
                           "two incoming edges labeled 1",
                           {v},
                           {Edge{*i1, v, 1}, Edge{*i2, v, 2}}};
        } else if (l1 == 1 || l2 == 1) {
          auto w1 = g.pred(*i1, 2), w2 = g.pred(*i2, 1);
          if (!w1 || !w2 || *w1 != *w2)
            square = Witness{"square_in",
                             "incoming mixed-label pair does not close a square",
                             {v},
                             {Edge{*i1, v, 1}, Edge{*i2, v, 2}}};
        }
      }
    }
    if (!square && !crit_consistent_)
      throw std::logic_error(
          "internal: per-color critical vertices disagree although all "
          "squares commute");
  }

  // Remote commuting: both-1 outgoing pairs must satisfy
  // F1 F2 F2 F1 = F2 F1 F1 F2, and dually for both-0 incoming pairs.
  std::optional<Witness> long_square;
  if (connected_ && lengths_ok_ && !square) {
    auto walk = [&g](Vertex v, std::initializer_list<int> colors,
                     bool forward) -> std::optional<Vertex> {
      std::optional<Vertex> w = v;
      for (int c : colors) {
        w = forward ? g.succ(*w, c) : g.pred(*w, c);
        if (!w) return std::nullopt;
      }
      return w;
    };
    for (Vertex v = 0; v < n && !long_square; ++v) {
      auto o1 = g.succ(v, 1), o2 = g.succ(v, 2);
      if (o1 && o2 && out_label_[0][v] == 1 && out_label_[1][v] == 1) {
        auto x = walk(v, {1, 2, 2, 1}, true);
        auto y = walk(v, {2, 1, 1, 2}, true);
        if (!x || !y || *x != *y)
          long_square = Witness{"long_square_out",
                                "both-1 outgoing pair: the two length-4 "
                                "forward paths do not meet",
                                {v},
                                {Edge{v, *o1, 1}, Edge{v, *o2, 2}}};
      }
      if (long_square) break;
      auto i1 = g.pred(v, 1), i2 = g.pred(v, 2);
      if (i1 && i2 && out_label_[0][*i1] == 0 && out_label_[1][*i2] == 0) {
        auto x = walk(v, {1, 2, 2, 1}, false);
        auto y = walk(v, {2, 1, 1, 2}, false);
        if (!x || !y || *x != *y)
          long_square = Witness{"long_square_in",
                                "both-0 incoming pair: the two length-4 "
                                "backward paths do not meet",
                                {v},
                                {Edge{*i1, v, 1}, Edge{*i2, v, 2}}};
      }
    }
  }

  if (!connected_) {
    Witness w{"connectivity", "graph is not weakly connected", {}, {}};
    w.vertices = {0, *unreached};
    cls_ = {Verdict::NotCrystal, std::move(w)};
  } else if (!paths_ok_) {
    cls_ = {Verdict::NotCrystal, std::move(*cycle_witness)};
  } else if (!lengths_ok_) {
    cls_ = {Verdict::NotCrystal, std::move(*length_witness)};
  } else if (square) {
    cls_ = {Verdict::NC, std::move(*square)};
  } else if (long_square) {
    cls_ = {Verdict::WC, std::move(*long_square)};
  } else {
    cls_ = {Verdict::RC, std::nullopt};
  }
}

void CrystalAnalysis::require_tuples() const {
  if (!paths_ok_)
    throw std::logic_error("length tuples unavailable: monochromatic "
                           "components are not simple paths");
}

void CrystalAnalysis::require_lengths() const {
  require_tuples();
  if (!lengths_ok_)
    throw std::logic_error("critical vertices unavailable: a line has no "
                           "unique switch vertex");
}

const LengthTuple& CrystalAnalysis::tuple(Vertex v) const {
  require_tuples();
  return tuples_[v];
}

int CrystalAnalysis::label(Vertex tail, int color) const {
  require_tuples();
  signed char l = out_label_[color - 1][tail];
  if (l < 0)
    throw std::invalid_argument("vertex '" + g_->name(tail) +
                                "' has no outgoing edge of color " +
                                std::to_string(color));
  return l;
}

int CrystalAnalysis::label(const Edge& e) const {
  if (!g_->has_edge(e.tail, e.head, e.color))
    throw std::invalid_argument("no such edge");
  return label(e.tail, e.color);
}

std::span<const Vertex> CrystalAnalysis::line(Vertex v, int color) const {
  require_tuples();
  return lines_[color - 1][line_of_[color - 1][v]];
}

Vertex CrystalAnalysis::line_critical(Vertex v, int color) const {
  require_lengths();
  return line_crit_[color - 1][line_of_[color - 1][v]];
}

bool CrystalAnalysis::is_critical(Vertex v, int color) const {
  require_lengths();
  return critical_flag_[color - 1][v];
}

bool CrystalAnalysis::is_critical(Vertex v) const {
  require_lengths();
  return critical_flag_[0][v] || critical_flag_[1][v];
}

const std::vector<Vertex>& CrystalAnalysis::critical_vertices() const {
  require_lengths();
  return criticals_;
}

bool CrystalAnalysis::criticals_consistent() const {
  require_lengths();
  return crit_consistent_;
}

Vertex CrystalAnalysis::source() const {
  auto s = g_->sources();
  if (s.size() != 1)
    throw std::logic_error("graph has " + std::to_string(s.size()) +
                           " sources, expected exactly one");
  return s[0];
}

Vertex CrystalAnalysis::sink() const {
  auto t = g_->sinks();
  if (t.size() != 1)
    throw std::logic_error("graph has " + std::to_string(t.size()) +
                           " sinks, expected exactly one");
  return t[0];
}

std::pair<int, int> CrystalAnalysis::params() const {
  if (verdict() != Verdict::RC)
    throw std::logic_error("parameters are defined for RC graphs only");
  const LengthTuple& t = tuple(source());
  return {t.h2, t.h1};
}

LengthTuple length_tuple(const ColoredDigraph& g, Vertex v) {
  const int n = static_cast<int>(g.vertex_count());
  auto walk = [&](int color, bool forward) {
    int steps = 0;
    std::optional<Vertex> w = v;
    while ((w = forward ? g.succ(*w, color) : g.pred(*w, color))) {
      if (++steps > n)
        throw CycleError("monochromatic component of '" + g.name(v) +
                         "' is not a simple path");
    }
    return steps;
  };
  LengthTuple t;
  t.t1 = walk(1, false);
  t.h1 = walk(1, true);
  t.t2 = walk(2, false);
  t.h2 = walk(2, true);
  return t;
}

int edge_label(const ColoredDigraph& g, const Edge& e) {
  if (!g.has_edge(e.tail, e.head, e.color))
    throw std::invalid_argument("no such edge");
  const int o = other_color(e.color);
  return length_tuple(g, e.tail).head_len(o) ==
                 length_tuple(g, e.head).head_len(o)
             ? 0
             : 1;
}

std::vector<Vertex> critical_vertices(const ColoredDigraph& g) {
  const CrystalAnalysis an(g);
  if (!an.lengths_ok()) {
    const Witness& w = *an.classification().witness;
    throw std::runtime_error("critical vertices undefined (" + w.kind + ": " +
                             w.detail + ")");
  }
  if (!an.criticals_consistent())
    throw std::runtime_error("critical vertices disagree across colors");
  return an.critical_vertices();
}

Classification classify(const ColoredDigraph& g) {
  return CrystalAnalysis(g).classification();
}

}  // namespace crystal
