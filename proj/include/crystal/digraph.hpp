// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crystal {

/// Dense vertex handle, valid only for the graph that produced it.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct Edge {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;
  int color = 1;  // 1 or 2
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline int other_color(int color) { return 3 - color; }

/// Raised when an edge list cannot be stored with per-vertex, per-color
/// in/out degree at most one (branching or duplicate edges).
class StructureError : public std::runtime_error {
 public:
  StructureError(const std::string& what, Edge offending)
      : std::runtime_error(what), edge(offending) {}
  Edge edge;
};

/// A finite 2-edge-colored digraph.
///
/// Vertices are opaque string ids kept in insertion order, so enumeration
/// and export are deterministic. Per vertex and per color there is at most
/// one outgoing and one incoming edge; the builder rejects anything else.
/// Instances are immutable once built and safe to share across threads.
class ColoredDigraph {
 public:
  class Builder;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t edge_count(int color) const;

  const std::string& name(Vertex v) const { return names_[v]; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Like find() but throws std::invalid_argument for unknown ids.
  Vertex vertex(std::string_view name) const;

  /// Head of the outgoing `color`-edge at v, if any (the partial operator
  /// F_color), and tail of the incoming one.
  std::optional<Vertex> succ(Vertex v, int color) const;
  std::optional<Vertex> pred(Vertex v, int color) const;

  bool has_edge(Vertex tail, Vertex head, int color) const;
  std::span<const Edge> edges() const { return edges_; }

  std::vector<Vertex> sources() const;  // no incoming edge of either color
  std::vector<Vertex> sinks() const;    // no outgoing edge of either color
  bool weakly_connected() const;

 private:
  friend class Builder;
  ColoredDigraph() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::vector<Vertex> succ_[2];
  std::vector<Vertex> pred_[2];
};

class ColoredDigraph::Builder {
 public:
  /// Throws std::invalid_argument on duplicate ids.
  Vertex add_vertex(std::string name);
  bool has_vertex(std::string_view name) const;
  /// Throws StructureError when the edge would violate the degree bound or
  /// duplicate an existing edge; std::invalid_argument on bad endpoints/color.
  void add_edge(Vertex tail, Vertex head, int color);
  void add_edge(std::string_view tail, std::string_view head, int color);
  std::size_t vertex_count() const { return g_.vertex_count(); }
  /// Consumes the builder.
  ColoredDigraph build();

 private:
  ColoredDigraph g_;
  bool built_ = false;
};

}  // namespace crystal
