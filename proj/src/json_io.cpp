// SPDX-License-Identifier: Apache-2.0
#include "crystal/json_io.hpp"

namespace crystal {

nlohmann::json graph_to_json(const ColoredDigraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"tail", g.name(e.tail)},
                     {"head", g.name(e.head)},
                     {"color", e.color}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace {

ColoredDigraph parse_graph(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw std::runtime_error(
        "graph json: expected an object with 'vertices' and 'edges'");
  const auto& vertices = doc.at("vertices");
  const auto& edges = doc.at("edges");
  if (!vertices.is_array() || !edges.is_array())
    throw std::runtime_error("graph json: 'vertices' and 'edges' must be arrays");
  ColoredDigraph::Builder b;
  for (const auto& v : vertices) {
    if (!v.is_string())
      throw std::runtime_error("graph json: vertex ids must be strings");
    b.add_vertex(v.get<std::string>());
  }
  for (const auto& e : edges) {
    if (!e.is_object() || !e.contains("tail") || !e.contains("head") ||
        !e.contains("color") || !e.at("tail").is_string() ||
        !e.at("head").is_string() || !e.at("color").is_number_integer())
      throw std::runtime_error(
          "graph json: each edge needs string 'tail'/'head' and integer 'color'");
    const int color = e.at("color").get<int>();
    if (color != 1 && color != 2)
      throw std::runtime_error("graph json: edge color must be 1 or 2");
    const std::string tail = e.at("tail").get<std::string>();
    const std::string head = e.at("head").get<std::string>();
    if (!b.has_vertex(tail))
      throw std::runtime_error("graph json: unknown edge tail '" + tail + "'");
    if (!b.has_vertex(head))
      throw std::runtime_error("graph json: unknown edge head '" + head + "'");
    b.add_edge(tail, head, color);
  }
  return b.build();
}

}  // namespace

ColoredDigraph graph_from_json(const nlohmann::json& doc) {
  return parse_graph(doc);
}

LenientLoad graph_from_json_lenient(const nlohmann::json& doc) {
  try {
    return {parse_graph(doc), std::nullopt};
  } catch (const StructureError& err) {
    Witness w;
    w.kind = "paths";
    w.detail = err.what();
    return {std::nullopt, std::move(w)};
  }
}

nlohmann::json witness_to_json(const Witness& w, const ColoredDigraph* g) {
  nlohmann::json out{{"kind", w.kind}, {"detail", w.detail}};
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v : w.vertices)
    vertices.push_back(g ? nlohmann::json(g->name(v)) : nlohmann::json(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : w.edges) {
    if (g)
      edges.push_back({{"tail", g->name(e.tail)},
                       {"head", g->name(e.head)},
                       {"color", e.color}});
    else
      edges.push_back({{"tail", e.tail}, {"head", e.head}, {"color", e.color}});
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

std::string graph_to_dot(const ColoredDigraph& g, const CrystalAnalysis& an) {
  if (!an.lengths_ok())
    throw std::invalid_argument(
        "dot export needs well-defined labels and critical vertices");
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::string dot = "digraph crystal {\n  rankdir=BT;\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dot += "  " + quoted(g.name(v));
    if (an.is_critical(v)) dot += " [shape=doublecircle]";
    dot += ";\n";
  }
  for (const Edge& e : g.edges()) {
    dot += "  " + quoted(g.name(e.tail)) + " -> " + quoted(g.name(e.head)) +
           " [color=" + (e.color == 1 ? "red" : "blue") + ",label=\"" +
           std::to_string(an.label(e)) + "\"];\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace crystal
