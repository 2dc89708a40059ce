// SPDX-License-Identifier: Apache-2.0
#include "crystal/digraph.hpp"

#include <algorithm>

namespace crystal {

std::size_t ColoredDigraph::edge_count(int color) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(),
      [color](const Edge& e) { return e.color == color; }));
}

std::optional<Vertex> ColoredDigraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex ColoredDigraph::vertex(std::string_view name) const {
  auto v = find(name);
  if (!v) throw std::invalid_argument("unknown vertex id: " + std::string(name));
  return *v;
}

std::optional<Vertex> ColoredDigraph::succ(Vertex v, int color) const {
  Vertex w = succ_[color - 1][v];
  if (w == kNoVertex) return std::nullopt;
  return w;
}

std::optional<Vertex> ColoredDigraph::pred(Vertex v, int color) const {
  Vertex w = pred_[color - 1][v];
  if (w == kNoVertex) return std::nullopt;
  return w;
}

bool ColoredDigraph::has_edge(Vertex tail, Vertex head, int color) const {
  auto w = succ(tail, color);
  return w && *w == head;
}

std::vector<Vertex> ColoredDigraph::sources() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (pred_[0][v] == kNoVertex && pred_[1][v] == kNoVertex) out.push_back(v);
  return out;
}

std::vector<Vertex> ColoredDigraph::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (succ_[0][v] == kNoVertex && succ_[1][v] == kNoVertex) out.push_back(v);
  return out;
}

bool ColoredDigraph::weakly_connected() const {
  if (names_.empty()) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int c : {1, 2}) {
      for (Vertex w : {succ_[c - 1][v], pred_[c - 1][v]}) {
        if (w != kNoVertex && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == vertex_count();
}

Vertex ColoredDigraph::Builder::add_vertex(std::string name) {
  if (g_.index_.count(name))
    throw std::invalid_argument("duplicate vertex id: " + name);
  Vertex v = static_cast<Vertex>(g_.names_.size());
  g_.index_.emplace(name, v);
  g_.names_.push_back(std::move(name));
  for (int c : {0, 1}) {
    g_.succ_[c].push_back(kNoVertex);
    g_.pred_[c].push_back(kNoVertex);
  }
  return v;
}

bool ColoredDigraph::Builder::has_vertex(std::string_view name) const {
  return g_.find(name).has_value();
}

void ColoredDigraph::Builder::add_edge(Vertex tail, Vertex head, int color) {
  if (color != 1 && color != 2)
    throw std::invalid_argument("edge color must be 1 or 2");
  if (tail >= g_.vertex_count() || head >= g_.vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  Edge e{tail, head, color};
  Vertex& out = g_.succ_[color - 1][tail];
  Vertex& in = g_.pred_[color - 1][head];
  if (out != kNoVertex) {
    if (out == head)
      throw StructureError("duplicate edge " + g_.names_[tail] + " -> " +
                               g_.names_[head],
                           e);
    throw StructureError("vertex '" + g_.names_[tail] +
                             "' would have two outgoing edges of color " +
                             std::to_string(color),
                         e);
  }
  if (in != kNoVertex)
    throw StructureError("vertex '" + g_.names_[head] +
                             "' would have two incoming edges of color " +
                             std::to_string(color),
                         e);
  out = head;
  in = tail;
  g_.edges_.push_back(e);
}

void ColoredDigraph::Builder::add_edge(std::string_view tail,
                                       std::string_view head, int color) {
  add_edge(g_.vertex(tail), g_.vertex(head), color);
}

ColoredDigraph ColoredDigraph::Builder::build() {
  if (built_) throw std::logic_error("builder already consumed");
  built_ = true;
  return std::move(g_);
}

}  // namespace crystal
