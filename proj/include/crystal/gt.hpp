// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"
#include "crystal/rational.hpp"

namespace crystal {

/// Counts of edges by (color, label) along any source path: alpha_l counts
/// 1-edges labeled l, beta_l counts 2-edges labeled l. Path-independent on
/// RC graphs.
struct Grading {
  int alpha0 = 0, alpha1 = 0, beta0 = 0, beta1 = 0;
  int alpha() const { return alpha0 + alpha1; }
  int beta() const { return beta0 + beta1; }
  std::array<int, 4> as_array() const { return {alpha0, alpha1, beta0, beta1}; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Deviation of a vertex from the critical diagonal of its sail:
/// eps = a - t1 - h2 and delta = b - t2 - h1. Inside a left sail
/// eps >= 0 and delta = -2*eps; inside a right sail delta >= 0 and
/// eps = -2*delta; eps = delta = 0 exactly at critical vertices.
struct EpsDelta {
  int eps = 0, delta = 0;
  friend bool operator==(const EpsDelta&, const EpsDelta&) = default;
};

/// Triangular integer array with border (a+b, a, 0): a <= x <= a+b,
/// 0 <= z <= a, z <= y <= x.
struct GtArray {
  int x = 0, y = 0, z = 0;
  friend auto operator<=>(const GtArray&, const GtArray&) = default;
};

using Point3 = std::array<int, 3>;
using RPoint3 = std::array<Rational, 3>;

/// Per-vertex gradings of one RC graph plus the derived integer embeddings
/// rho = (alpha0, alpha1, beta) and rho' = (alpha, beta0, beta1). Keeps
/// references to the graph and analysis, which must outlive it.
class Embedding {
 public:
  Embedding(const ColoredDigraph& g, const CrystalAnalysis& an);

  const ColoredDigraph& graph() const { return *g_; }
  int a() const { return a_; }
  int b() const { return b_; }

  const Grading& grading(Vertex v) const { return grad_[v]; }
  Point3 rho(Vertex v) const {
    const Grading& gr = grad_[v];
    return {gr.alpha0, gr.alpha1, gr.beta()};
  }
  Point3 rho_prime(Vertex v) const {
    const Grading& gr = grad_[v];
    return {gr.alpha(), gr.beta0, gr.beta1};
  }
  std::optional<Vertex> vertex_with_rho(const Point3& p) const;

  GtArray to_gt(Vertex v) const {
    const Grading& gr = grad_[v];
    return {gr.alpha1 + a_, gr.beta(), gr.alpha0};
  }
  std::optional<Vertex> from_gt(const GtArray& m) const;

  EpsDelta eps_delta(Vertex v) const;

 private:
  const ColoredDigraph* g_;
  const CrystalAnalysis* an_;
  int a_ = 0, b_ = 0;
  std::vector<Grading> grad_;
  std::map<Point3, Vertex> rho_index_;
};

/// Splits beta back into (beta0, beta1) from rho = (alpha0, alpha1, beta).
std::pair<int, int> restore_beta(const Point3& rho);
/// Splits alpha back into (alpha0, alpha1) from rho' = (alpha, beta0, beta1).
std::pair<int, int> restore_alpha(const Point3& rho_prime);

/// Membership in the vertex polytope, coordinates (alpha0, alpha1, beta):
/// 0 <= alpha0 <= a, 0 <= alpha1 <= b, alpha0 <= beta <= alpha1 + a.
bool polytope_contains(int a, int b, const RPoint3& pt);
/// Image polytope in coordinates (alpha, beta0, beta1):
/// 0 <= beta0 <= b, 0 <= beta1 <= a, beta0 <= alpha <= beta1 + b.
bool polytope_prime_contains(int a, int b, const RPoint3& pt);
/// The (at most seven) polytope vertices, duplicates removed.
std::vector<Point3> polytope_vertices(int a, int b);
/// Integer points in lexicographic order.
std::vector<Point3> polytope_integer_points(int a, int b);

/// Piecewise-linear bijection of the two polytopes:
/// (alpha0, alpha1, beta) -> (alpha0+alpha1, min(alpha1, beta-alpha0),
/// max(alpha0, beta-alpha1)). Defined on all rational points.
RPoint3 omega(const RPoint3& p);
Point3 omega_point(const Point3& p);
/// The same map conjugated into array coordinates: border (a+b, a, 0)
/// arrays to border (a+b, b, 0) arrays.
GtArray omega_tilde(int a, int b, const GtArray& m);

bool gt_valid(int a, int b, const GtArray& m);
/// All integer arrays with border (a+b, a, 0), (x, y, z)-lexicographic.
std::vector<GtArray> gt_arrays(int a, int b);
std::string gt_name(const GtArray& m);

/// Crystal moves on arrays: the 2-edge raises y when y < x; the 1-edge
/// raises z when z < a, z < y and y - z > x - a, otherwise raises x when
/// x < a + b.
struct GtMoves {
  std::optional<GtArray> edge1;
  std::optional<GtArray> edge2;
};
GtMoves gt_moves(int a, int b, const GtArray& m);

/// The crystal graph on arrays with border (a+b, a, 0); isomorphic to
/// K(a,b). Vertex ids are "x,y,z".
ColoredDigraph gt_crystal(int a, int b);

/// Canonical color-preserving isomorphism by simultaneous traversal from the
/// unique sources; forced because per-vertex, per-color out-degree is <= 1.
struct IsoResult {
  std::optional<std::vector<Vertex>> map;  // g-vertex -> h-vertex
  std::string mismatch;                    // set when !map
};
IsoResult check_isomorphism(const ColoredDigraph& g, const ColoredDigraph& h);

}  // namespace crystal
