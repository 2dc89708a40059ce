// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"

namespace crystal {

/// The decomposition is a theorem for RC graphs; any structural mismatch
/// found while computing it indicates a classifier bug.
class DecompositionError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// One maximal sail: a triangular half-grid subgraph whose diagonal consists
/// of critical vertices. Left sails carry the 1-edges labeled 0 and 2-edges
/// labeled 1; right sails the other two kinds.
struct Sail {
  bool left = true;
  int index = 0;  // j for left sails, i for right sails
  int size = 0;
  std::vector<Vertex> diagonal;  // critical vertices, numbered from 0
  std::vector<Vertex> cells;     // triangular grid storage

  /// Vertex at local coordinates (p,q); p <= q in a left sail, q <= p in a
  /// right sail.
  Vertex at(int p, int q) const {
    return left ? cells[static_cast<std::size_t>(q) * (q + 1) / 2 + p]
                : cells[static_cast<std::size_t>(p) * (p + 1) / 2 + q];
  }
  Vertex source() const { return at(0, 0); }
};

struct SailMembership {
  int sail = 0;  // index into left_sails / right_sails
  int p = 0;
  int q = 0;
};

/// Maximal left sails L_0..L_b and right sails R_0..R_a of an RC graph,
/// numbered so that the unique common vertex of R_i and L_j has number i in
/// the diagonal of L_j and number j in the diagonal of R_i.
struct SailDecomposition {
  int a = 0;
  int b = 0;
  std::vector<Sail> left_sails;
  std::vector<Sail> right_sails;
  std::vector<std::optional<SailMembership>> left_of;   // per vertex
  std::vector<std::optional<SailMembership>> right_of;  // per vertex

  /// Common vertex of R_i and L_j.
  Vertex critical(int i, int j) const {
    return crit_grid[static_cast<std::size_t>(i) * (b + 1) + j];
  }
  /// Grid position of a critical vertex, empty otherwise.
  std::optional<std::pair<int, int>> critical_index(Vertex v) const {
    if (crit_index[v].first < 0) return std::nullopt;
    return crit_index[v];
  }

  std::vector<Vertex> crit_grid;                  // (a+1) x (b+1)
  std::vector<std::pair<int, int>> crit_index;    // per vertex; (-1,-1) if none
};

/// Computes the decomposition; requires classify(g) == RC.
SailDecomposition decompose(const ColoredDigraph& g, const CrystalAnalysis& an);
/// Same, running its own analysis.
SailDecomposition decompose(const ColoredDigraph& g);

/// Standalone copy of one sail with coordinate ids "(p,q)", plus the ids of
/// its diagonal in order. Suitable as a diagonal_product factor.
struct ExtractedSail {
  ColoredDigraph graph;
  std::vector<std::string> diagonal;
};
ExtractedSail extract_sail(const ColoredDigraph& g, const CrystalAnalysis& an,
                           const Sail& sail);

}  // namespace crystal
