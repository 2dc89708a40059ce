// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crystal/digraph.hpp"

namespace crystal {

/// Bit matrix of the reflexive-transitive reachability relation:
/// get(u, v) == true iff v is reachable from u (including u itself).
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n_ * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  void set(Vertex u, Vertex v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::span<std::uint64_t> row_mut(Vertex u) {
    return {bits_.data() + u * words_, words_};
  }

  friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Deterministic topological order (Kahn, ascending tie-break).
/// Throws std::invalid_argument when the graph has a directed cycle.
std::vector<Vertex> topological_order(const ColoredDigraph& g);

/// Reference kernel: one forward breadth-first search per start vertex.
ReachMatrix transitive_closure_serial(const ColoredDigraph& g);

/// Production kernel: row unions in reverse topological depth levels; rows
/// within one level are independent and processed in parallel.
ReachMatrix transitive_closure_parallel(const ColoredDigraph& g);

/// Dispatch used by the rest of the library.
inline ReachMatrix transitive_closure(const ColoredDigraph& g) {
  return transitive_closure_parallel(g);
}

}  // namespace crystal
