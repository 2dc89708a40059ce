// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystal/digraph.hpp"

namespace crystal {

/// Per-vertex monochromatic path lengths: t_i edges behind, h_i edges ahead
/// of the vertex on its color-i line.
struct LengthTuple {
  int t1 = 0, h1 = 0, t2 = 0, h2 = 0;
  int tail_len(int color) const { return color == 1 ? t1 : t2; }
  int head_len(int color) const { return color == 1 ? h1 : h2; }
  std::pair<int, int> sigma() const { return {h1 - t1, h2 - t2}; }
  friend bool operator==(const LengthTuple&, const LengthTuple&) = default;
};

enum class Verdict { NotCrystal = 0, NC = 1, WC = 2, RC = 3 };

const char* verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(std::string_view s);

/// Description of the first failed check, in vertex-id order.
struct Witness {
  std::string kind;  // connectivity | paths | lengths | square_out |
                     // square_in | long_square_out | long_square_in
  std::string detail;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct Classification {
  Verdict verdict = Verdict::NotCrystal;
  std::optional<Witness> witness;  // present iff verdict != RC
};

/// Derived data of one graph: monochromatic lines, length tuples, edge
/// labels, per-line switch (critical) vertices, and the ladder verdict.
/// Everything is computed once in the constructor; the object is read-only
/// afterwards and safe to share across threads. It keeps a reference to the
/// graph, which must outlive it.
class CrystalAnalysis {
 public:
  explicit CrystalAnalysis(const ColoredDigraph& g);

  const ColoredDigraph& graph() const { return *g_; }
  const Classification& classification() const { return cls_; }
  Verdict verdict() const { return cls_.verdict; }
  bool at_least(Verdict v) const {
    return static_cast<int>(cls_.verdict) >= static_cast<int>(v);
  }

  /// True once every monochromatic component is known to be a simple path.
  bool paths_ok() const { return paths_ok_; }
  /// True once every line additionally has a unique length-switch vertex.
  bool lengths_ok() const { return lengths_ok_; }

  const LengthTuple& tuple(Vertex v) const;
  /// Label of the outgoing `color`-edge at `tail`: 0 when the opposite-color
  /// head length is preserved across the edge, 1 otherwise.
  int label(Vertex tail, int color) const;
  int label(const Edge& e) const;

  /// The color-line through v, in path order.
  std::span<const Vertex> line(Vertex v, int color) const;
  /// The switch vertex of the line through v (incoming edge labeled 0,
  /// outgoing labeled 1, where present).
  Vertex line_critical(Vertex v, int color) const;
  bool is_critical(Vertex v, int color) const;
  bool is_critical(Vertex v) const;
  /// Union over both colors, ascending vertex order.
  const std::vector<Vertex>& critical_vertices() const;
  bool criticals_consistent() const;

  /// Unique source/sink; throws std::logic_error when not unique.
  Vertex source() const;
  Vertex sink() const;
  /// Defining parameters (a, b) = (h2(source), h1(source)) of an RC graph.
  std::pair<int, int> params() const;

 private:
  void require_tuples() const;
  void require_lengths() const;

  const ColoredDigraph* g_;
  Classification cls_;
  bool connected_ = false;
  bool paths_ok_ = false;
  bool lengths_ok_ = false;
  bool crit_consistent_ = false;

  std::vector<int> line_of_[2];
  std::vector<std::vector<Vertex>> lines_[2];
  std::vector<LengthTuple> tuples_;
  std::vector<signed char> out_label_[2];  // label of out-edge keyed by tail
  std::vector<Vertex> line_crit_[2];       // per line id
  std::vector<char> critical_flag_[2];
  std::vector<Vertex> criticals_;
};

/// Length tuple of one vertex by direct path walking; reports a cycle in a
/// monochromatic component of v via CycleError.
class CycleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
LengthTuple length_tuple(const ColoredDigraph& g, Vertex v);

/// Label of one edge computed from freshly walked endpoint tuples.
/// Propagates CycleError; throws std::invalid_argument when e is not in g.
int edge_label(const ColoredDigraph& g, const Edge& e);

/// Union over both colors of each line's switch vertex, in ascending vertex
/// order. Throws std::runtime_error when the path/length checks fail or the
/// per-color critical sets disagree.
std::vector<Vertex> critical_vertices(const ColoredDigraph& g);

/// Convenience wrapper running a fresh analysis.
Classification classify(const ColoredDigraph& g);

}  // namespace crystal
