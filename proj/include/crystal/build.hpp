// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/digraph.hpp"

namespace crystal {

/// Canonical vertex id of K(a,b): sail kind + sail index + local coordinates.
/// Critical vertices are owned by their left sail ("L2(1,1)"); the right-sail
/// alias is never used as a graph id.
std::string sail_vertex_name(bool left, int sail, int p, int q);

/// Triangular half-grid on pairs (i,j), 0 <= i <= j <= a, with 1-edges
/// (i,j)->(i+1,j) and 2-edges (i,j)->(i,j+1). Vertex ids are "(i,j)".
ColoredDigraph build_left_sail(int a);

/// Mirror half-grid on pairs (i,j), 0 <= j <= i <= b.
ColoredDigraph build_right_sail(int b);

/// Ids of the diagonal vertices "(i,i)", i = 0..size.
std::vector<std::string> sail_diagonal(int size);

/// Replicate-and-glue: |T| copies of g and |S| copies of h, with vertex s of
/// the t-th copy of g identified with vertex t of the s-th copy of h.
/// The result has |V(g)||T| + |V(h)||S| - |S||T| vertices and
/// |E(g)||T| + |E(h)||S| edges; colors are inherited.
ColoredDigraph diagonal_product(const ColoredDigraph& g,
                                std::span<const std::string> s,
                                const ColoredDigraph& h,
                                std::span<const std::string> t);

/// The crystal graph K(a,b): b+1 left sails of size a and a+1 right sails of
/// size b glued along their diagonals, with canonical vertex ids.
ColoredDigraph build_rc(int a, int b);

/// Expected |V(K(a,b))| = (a+1)(b+1)(a+b+2)/2.
long long rc_vertex_count(int a, int b);

/// All edges reversed, colors preserved, same vertex ids.
ColoredDigraph dualize(const ColoredDigraph& g);

/// Two disjoint copies of g with the given edge swapped crosswise: the copies
/// keep every edge except (tail,head), which is replaced by the pair
/// 1:tail -> 2:head and 2:tail -> 1:head.
ColoredDigraph doubled_swap(const ColoredDigraph& g, std::string_view tail,
                            std::string_view head, int color);

}  // namespace crystal
