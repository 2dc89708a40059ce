// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"

namespace crystal {

/// Vertex of the universal crystal as a point of the Z^5 semigroup.
/// len/pos/crit describe the 1-line through the vertex: total edge count,
/// the vertex position and the critical-vertex position on it; down/up are
/// the 2-line tail/head lengths at that critical vertex.
struct ConePoint {
  long long len = 0;   // X
  long long pos = 0;   // x = t1(v)
  long long crit = 0;  // c = t1(r)
  long long down = 0;  // D = t2(r)
  long long up = 0;    // U = h2(r)

  friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
  friend ConePoint operator+(const ConePoint& a, const ConePoint& b) {
    return {a.len + b.len, a.pos + b.pos, a.crit + b.crit, a.down + b.down,
            a.up + b.up};
  }
};

std::string cone_str(const ConePoint& p);

inline bool cone_valid(const ConePoint& p) {
  return 0 <= p.pos && p.pos <= p.len && 0 <= p.crit && p.crit <= p.len &&
         p.down >= 0 && p.up >= 0;
}

/// The crystal operators as partial maps on cone points. A disengaged result
/// means "not applicable", never an error.
std::optional<ConePoint> cone_f1(const ConePoint& p);
std::optional<ConePoint> cone_f2(const ConePoint& p);

/// Cone point of a vertex of K(a,b); needs only the line analysis.
ConePoint cone_encode(const CrystalAnalysis& an, Vertex v);

/// Ambient parameters and canonical vertex id of a cone point, by formula
/// alone. Throws std::invalid_argument when the point is outside the cone.
struct ConeDecoded {
  int a = 0;
  int b = 0;
  std::string vertex_name;
};
ConeDecoded cone_decode_name(const ConePoint& p);

/// Decoder with a memoized cache of ambient graphs, so repeated queries
/// against the same K(a,b) reuse one build. The cache is the only shared
/// state and is lock-guarded.
class UniversalCone {
 public:
  struct Decoded {
    int a = 0;
    int b = 0;
    Vertex vertex = kNoVertex;
    std::string vertex_name;
  };
  Decoded decode(const ConePoint& p);
  ConePoint encode(int a, int b, std::string_view vertex_name);

  const ColoredDigraph& graph(int a, int b);
  const CrystalAnalysis& analysis(int a, int b);

 private:
  struct Entry {
    std::unique_ptr<ColoredDigraph> graph;
    std::unique_ptr<CrystalAnalysis> analysis;
  };
  const Entry& entry(int a, int b);
  std::mutex mu_;
  std::map<std::pair<int, int>, Entry> cache_;
};

/// Cone points of all vertices of K(a,b), in canonical vertex order.
std::vector<ConePoint> cone_image(int a, int b);

/// True iff the encoded image of K(a,b) equals the a-fold sumset of the
/// K(1,0) image plus the b-fold sumset of the K(0,1) image in Z^5.
bool minkowski_check(int a, int b);

}  // namespace crystal
