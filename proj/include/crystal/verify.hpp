// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"
#include "crystal/gt.hpp"
#include "crystal/lattice.hpp"

namespace crystal::verify {

/// A check passes when the issue is empty; otherwise it carries the first
/// failure found, with names rather than indices where possible.
using Issue = std::optional<std::string>;

struct Check {
  std::string name;
  Issue failure;
  bool pass() const { return !failure.has_value(); }
};

struct Options {
  bool parallel = true;
  bool mutations = true;
};

// -- construction ----------------------------------------------------------
Issue counts(int a, int b);
Issue vertex_count_vs_product(int a, int b);

// -- axioms and local structure --------------------------------------------
Issue degree_bounds(const ColoredDigraph& g);
Issue acyclicity(const ColoredDigraph& g);
Issue classifies_rc(const ColoredDigraph& g);
Issue grading_two_paths(const ColoredDigraph& g);
Issue sigma_steps(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue labels_monotone(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue label_neighbor_rule(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue square_completion(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue edge_deletion_sensitivity(const ColoredDigraph& g, bool parallel);
Issue dual_properties(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue decomposition_roundtrip(const ColoredDigraph& g,
                              const CrystalAnalysis& an);

// -- gradings, polytopes, arrays -------------------------------------------
Issue eps_delta_relations(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue grading_bounds(const CrystalAnalysis& an, const Embedding& emb);
Issue grading_realizability(const Embedding& emb);
Issue rho_injective(const Embedding& emb);
Issue restore_roundtrip(const Embedding& emb);
Issue polytope_points(const Embedding& emb);
Issue polytope_vertex_list(int a, int b);
Issue omega_properties(const Embedding& emb);
Issue gt_shift_conjugation(int a, int b);
Issue critical_section(const CrystalAnalysis& an, const Embedding& emb);
Issue rho_edge_steps(const ColoredDigraph& g, const CrystalAnalysis& an,
                     const Embedding& emb);
Issue gt_isomorphism(int a, int b);
Issue gt_roundtrip(const Embedding& emb);

// -- order and lattice -------------------------------------------------------
Issue order_formula_matches_reachability(const PosetView& view);
Issue join_meet_against_oracle(const PosetView& view, bool parallel);
Issue lattice_laws(const PosetView& view);
Issue sail_bound_compatibility(const PosetView& view);
Issue nondistributivity_witness(const PosetView& view);

// -- universal cone ----------------------------------------------------------
Issue cone_roundtrip(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue cone_tuple_roundtrip(int bound);
Issue cone_operators(const ColoredDigraph& g, const CrystalAnalysis& an);
Issue cone_generators();
Issue cone_separation(int max_ab);
Issue cone_minkowski(int a, int b);

// -- fixtures ----------------------------------------------------------------
/// Two copies of K(1,1) with the incoming 1-edge of the critical vertex
/// L0(1,1) swapped crosswise: connected, two sources, all squares commute,
/// yet not a regular crystal.
ColoredDigraph two_source_fixture();
Issue two_source_fixture_properties();

/// Scans every vertex for remote-commuting failures, both directions.
/// Requires a graph whose squares all commute (verdict WC or RC). On finite
/// graphs the backward half can never fail alone; tests assert exactly that
/// over swap corpora.
struct LongSquareScan {
  bool forward_violation = false;   // both-1 outgoing pairs
  bool backward_violation = false;  // both-0 incoming pairs
};
LongSquareScan long_square_scan(const ColoredDigraph& g,
                                const CrystalAnalysis& an);

/// The full suite for one parameter pair.
std::vector<Check> run_all(int a, int b, const Options& opts);

}  // namespace crystal::verify
