// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "crystal/decomposition.hpp"
#include "crystal/gt.hpp"
#include "crystal/reach.hpp"

namespace crystal {

/// Reachability order of an RC graph together with the closed-form lattice
/// operations. Joins are computed case-by-case from the sail decomposition;
/// meets are joins in the dual graph, which shares vertex ids. The view owns
/// a copy of the graph, so vertex handles stay valid for its lifetime.
class PosetView {
 public:
  explicit PosetView(ColoredDigraph g);

  const ColoredDigraph& graph() const { return g_; }
  const CrystalAnalysis& analysis() const { return *an_; }
  const SailDecomposition& decomposition() const { return primal_.dec; }
  const Embedding& embedding() const { return *emb_; }

  bool reachable(Vertex u, Vertex v) const { return up_.get(u, v); }
  /// Closed-form order test on gradings; agrees with reachable().
  bool leq(Vertex u, Vertex v) const;

  Vertex join(Vertex u, Vertex v) const;
  Vertex meet(Vertex u, Vertex v) const;

  /// Unique minimal upper / maximal lower bound under reachability, found by
  /// enumeration; empty when missing or not unique.
  std::optional<Vertex> oracle_join(Vertex u, Vertex v) const;
  std::optional<Vertex> oracle_meet(Vertex u, Vertex v) const;

  /// Minimal critical vertex above v / maximal critical vertex below v
  /// inside a maximal sail containing v.
  Vertex sail_min_above(Vertex v) const { return primal_.min_above[v]; }
  Vertex sail_max_below(Vertex v) const { return primal_.max_below[v]; }

 private:
  struct Side {
    SailDecomposition dec;
    std::vector<Vertex> min_above;  // p(v)
    std::vector<Vertex> max_below;  // q(v)
    Vertex join(Vertex u, Vertex v) const;
  };
  static Side make_side(const ColoredDigraph& g, const CrystalAnalysis& an);

  ColoredDigraph g_;
  std::unique_ptr<CrystalAnalysis> an_;
  std::unique_ptr<Embedding> emb_;
  Side primal_;
  std::unique_ptr<ColoredDigraph> dual_graph_;
  std::unique_ptr<CrystalAnalysis> dual_an_;
  Side dual_;
  ReachMatrix up_;
  ReachMatrix down_;
};

/// Unique minimal element of up(u) & up(v); `up` rows are reachability
/// from a vertex, `down` rows reachability to it.
std::optional<Vertex> unique_min_upper(const ReachMatrix& up,
                                       const ReachMatrix& down, Vertex u,
                                       Vertex v);

/// True iff every pair of vertices has a unique minimal upper bound and a
/// unique maximal lower bound under reachability. Requires an acyclic graph.
bool is_lattice_bruteforce(const ColoredDigraph& g);

/// Compare closed-form join/meet against the enumeration oracle on every
/// pair; returns the first mismatch description. The parallel variant
/// splits the pair loop across threads.
std::optional<std::string> verify_lattice_pairs_serial(const PosetView& view);
std::optional<std::string> verify_lattice_pairs_parallel(const PosetView& view);

}  // namespace crystal
