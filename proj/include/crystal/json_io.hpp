// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "crystal/analysis.hpp"
#include "crystal/digraph.hpp"

namespace crystal {

/// Wire format: {"vertices":["id",...],
///               "edges":[{"tail":"id","head":"id","color":1|2},...]}.
/// Vertex and edge order is preserved, so the output is byte-stable.
nlohmann::json graph_to_json(const ColoredDigraph& g);

/// Throws std::runtime_error on malformed documents (missing keys, bad
/// types, unknown endpoints); StructureError propagates for degree and
/// duplicate-edge violations.
ColoredDigraph graph_from_json(const nlohmann::json& doc);

/// Like graph_from_json, but degree/duplicate violations come back as a
/// classification witness instead of an exception, so callers can report
/// the input as NotCrystal.
struct LenientLoad {
  std::optional<ColoredDigraph> graph;
  std::optional<Witness> violation;
};
LenientLoad graph_from_json_lenient(const nlohmann::json& doc);

nlohmann::json witness_to_json(const Witness& w, const ColoredDigraph* g);

/// DOT export: color-1 edges red, color-2 edges blue, both labeled with
/// their 0/1 edge label; critical vertices drawn as double circles.
/// Requires the line analysis to have passed (labels must exist).
std::string graph_to_dot(const ColoredDigraph& g, const CrystalAnalysis& an);

}  // namespace crystal
