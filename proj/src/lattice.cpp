// SPDX-License-Identifier: Apache-2.0
#include "crystal/lattice.hpp"

#include <algorithm>
#include <bit>

#include "crystal/build.hpp"

namespace crystal {

namespace {

using GridIndex = std::pair<int, int>;

GridIndex grid_join(GridIndex x, GridIndex y) {
  return {std::max(x.first, y.first), std::max(x.second, y.second)};
}

bool grid_leq(GridIndex x, GridIndex y) {
  return x.first <= y.first && x.second <= y.second;
}

}  // namespace

PosetView::PosetView(ColoredDigraph g) : g_(std::move(g)) {
  an_ = std::make_unique<CrystalAnalysis>(g_);
  if (an_->verdict() != Verdict::RC)
    throw std::invalid_argument("poset view requires an RC graph, got " +
                                std::string(verdict_name(an_->verdict())));
  emb_ = std::make_unique<Embedding>(g_, *an_);
  primal_ = make_side(g_, *an_);
  dual_graph_ = std::make_unique<ColoredDigraph>(dualize(g_));
  dual_an_ = std::make_unique<CrystalAnalysis>(*dual_graph_);
  if (dual_an_->verdict() != Verdict::RC)
    throw std::logic_error("dual of an RC graph failed to classify as RC");
  dual_ = make_side(*dual_graph_, *dual_an_);
  up_ = transitive_closure(g_);
  down_ = transitive_closure(*dual_graph_);
}

PosetView::Side PosetView::make_side(const ColoredDigraph& g,
                                     const CrystalAnalysis& an) {
  Side side{decompose(g, an), {}, {}};
  const std::size_t n = g.vertex_count();
  side.min_above.assign(n, kNoVertex);
  side.max_below.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (side.dec.critical_index(v)) {
      side.min_above[v] = v;
      side.max_below[v] = v;
    } else if (const auto& l = side.dec.left_of[v]) {
      side.min_above[v] = side.dec.critical(l->q, l->sail);
      side.max_below[v] = side.dec.critical(l->p, l->sail);
    } else {
      const auto& r = side.dec.right_of[v];
      side.min_above[v] = side.dec.critical(r->sail, r->p);
      side.max_below[v] = side.dec.critical(r->sail, r->q);
    }
  }
  return side;
}

Vertex PosetView::Side::join(Vertex u, Vertex v) const {
  if (u == v) return u;
  const auto cu = dec.critical_index(u);
  const auto cv = dec.critical_index(v);
  if (cu && cv) {
    auto [i, j] = grid_join(*cu, *cv);
    return dec.critical(i, j);
  }

  const auto &lu = dec.left_of[u], &lv = dec.left_of[v];
  if (lu && lv && lu->sail == lv->sail)
    return dec.left_sails[lu->sail].at(std::max(lu->p, lv->p),
                                       std::max(lu->q, lv->q));
  const auto &ru = dec.right_of[u], &rv = dec.right_of[v];
  if (ru && rv && ru->sail == rv->sail)
    return dec.right_sails[ru->sail].at(std::max(ru->p, rv->p),
                                        std::max(ru->q, rv->q));

  // Different maximal sails. When the lower covers are comparable, the join
  // sits in the sail of the higher vertex; otherwise it is the join of the
  // covers in the critical grid.
  const auto pu = *dec.critical_index(min_above[u]);
  const auto pv = *dec.critical_index(min_above[v]);
  auto bounded = [&](Vertex t, GridIndex other) -> Vertex {
    const auto c1 = *dec.critical_index(min_above[t]);
    const auto c2 = grid_join(other, *dec.critical_index(max_below[t]));
    if (c1 == c2) return dec.critical(c1.first, c1.second);
    if (const auto& l = dec.left_of[t]) {
      const int j = l->sail;
      if (c1.second != j || c2.second != j || c2.first > c1.first)
        throw std::logic_error("join: bounding criticals leave the sail");
      return dec.left_sails[j].at(c2.first, c1.first);
    }
    const auto& r = dec.right_of[t];
    const int i = r->sail;
    if (c1.first != i || c2.first != i || c2.second > c1.second)
      throw std::logic_error("join: bounding criticals leave the sail");
    return dec.right_sails[i].at(c1.second, c2.second);
  };
  if (grid_leq(pu, pv)) return bounded(v, pu);
  if (grid_leq(pv, pu)) return bounded(u, pv);
  auto [i, j] = grid_join(pu, pv);
  return dec.critical(i, j);
}

bool PosetView::leq(Vertex u, Vertex v) const {
  const Grading& gu = emb_->grading(u);
  const Grading& gv = emb_->grading(v);
  if (gu.beta1 <= gv.alpha0 && gu.alpha1 <= gv.beta0) return true;
  if (gu.alpha0 == gv.alpha0 && gu.beta1 == gv.beta1 &&
      gu.alpha0 == gu.beta1 && gu.alpha1 <= gv.alpha1 && gu.beta0 <= gv.beta0)
    return true;
  if (gu.alpha1 == gv.alpha1 && gu.beta0 == gv.beta0 &&
      gu.alpha1 == gu.beta0 && gu.alpha0 <= gv.alpha0 && gu.beta1 <= gv.beta1)
    return true;
  return false;
}

Vertex PosetView::join(Vertex u, Vertex v) const { return primal_.join(u, v); }

Vertex PosetView::meet(Vertex u, Vertex v) const { return dual_.join(u, v); }

std::optional<Vertex> PosetView::oracle_join(Vertex u, Vertex v) const {
  return unique_min_upper(up_, down_, u, v);
}

std::optional<Vertex> PosetView::oracle_meet(Vertex u, Vertex v) const {
  return unique_min_upper(down_, up_, u, v);
}

std::optional<Vertex> unique_min_upper(const ReachMatrix& up,
                                       const ReachMatrix& down, Vertex u,
                                       Vertex v) {
  const std::size_t words = up.words_per_row();
  const auto ru = up.row(u);
  const auto rv = up.row(v);
  std::optional<Vertex> found;
  for (std::size_t wi = 0; wi < words; ++wi) {
    std::uint64_t bits = ru[wi] & rv[wi];
    while (bits) {
      const int bit = std::countr_zero(bits);
      bits &= bits - 1;
      const Vertex w = static_cast<Vertex>(wi * 64 + bit);
      const auto dw = down.row(w);
      bool minimal = true;
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t below = ru[k] & rv[k] & dw[k];
        if (k == wi) below &= ~(std::uint64_t{1} << bit);
        if (below) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        if (found) return std::nullopt;  // two minimal upper bounds
        found = w;
      }
    }
  }
  return found;
}

bool is_lattice_bruteforce(const ColoredDigraph& g) {
  const ReachMatrix up = transitive_closure(g);
  const ReachMatrix down = transitive_closure(dualize(g));
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v)
      if (!unique_min_upper(up, down, u, v) ||
          !unique_min_upper(down, up, u, v))
        return false;
  return true;
}

namespace {

std::optional<std::string> pair_issue(const PosetView& view, Vertex u,
                                      Vertex v) {
  const ColoredDigraph& g = view.graph();
  const auto oj = view.oracle_join(u, v);
  if (!oj)
    return "no unique minimal upper bound for ('" + g.name(u) + "','" +
           g.name(v) + "')";
  if (view.join(u, v) != *oj)
    return "join mismatch at ('" + g.name(u) + "','" + g.name(v) +
           "'): closed form gives '" + g.name(view.join(u, v)) +
           "', oracle '" + g.name(*oj) + "'";
  const auto om = view.oracle_meet(u, v);
  if (!om)
    return "no unique maximal lower bound for ('" + g.name(u) + "','" +
           g.name(v) + "')";
  if (view.meet(u, v) != *om)
    return "meet mismatch at ('" + g.name(u) + "','" + g.name(v) +
           "'): closed form gives '" + g.name(view.meet(u, v)) +
           "', oracle '" + g.name(*om) + "'";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_lattice_pairs_serial(const PosetView& view) {
  const Vertex n = static_cast<Vertex>(view.graph().vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v)
      if (auto issue = pair_issue(view, u, v)) return issue;
  return std::nullopt;
}

std::optional<std::string> verify_lattice_pairs_parallel(
    const PosetView& view) {
  const std::int64_t n = static_cast<std::int64_t>(view.graph().vertex_count());
  std::int64_t best_u = n;
  std::int64_t best_v = n;
  std::string best_issue;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u; v < n; ++v) {
      auto issue = pair_issue(view, static_cast<Vertex>(u),
                              static_cast<Vertex>(v));
      if (!issue) continue;
#pragma omp critical
      {
        if (u < best_u || (u == best_u && v < best_v)) {
          best_u = u;
          best_v = v;
          best_issue = *issue;
        }
      }
    }
  }
  if (best_u == n) return std::nullopt;
  return best_issue;
}

}  // namespace crystal
