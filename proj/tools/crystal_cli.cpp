// SPDX-License-Identifier: Apache-2.0
//
// crystal: generate, classify, inspect and convert regular 2-colored
// crystal graphs. Machine-readable JSON goes to stdout, human summaries to
// stderr; nonzero exit on malformed input or failed verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crystal/analysis.hpp"
#include "crystal/build.hpp"
#include "crystal/cone.hpp"
#include "crystal/decomposition.hpp"
#include "crystal/gt.hpp"
#include "crystal/json_io.hpp"
#include "crystal/lattice.hpp"
#include "crystal/rational.hpp"
#include "crystal/verify.hpp"

namespace {

using crystal::Vertex;

long long size_cap() {
  const char* env = std::getenv("CRYSTAL_MAX_SIZE");
  if (!env || !*env) return 100000;
  return std::atoll(env);
}

void check_size(int a, int b) {
  const long long n = crystal::rc_vertex_count(a, b);
  if (n > size_cap())
    throw std::runtime_error("K(" + std::to_string(a) + "," +
                             std::to_string(b) + ") has " + std::to_string(n) +
                             " vertices, above CRYSTAL_MAX_SIZE=" +
                             std::to_string(size_cap()));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json doc;
  in >> doc;
  return doc;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

// Positional a b and --a/--b are both accepted; flags win.
struct ParamPair {
  int a_pos = -1, b_pos = -1;
  int a_flag = -1, b_flag = -1;
  void attach(CLI::App* cmd) {
    cmd->add_option("A", a_pos, "parameter a");
    cmd->add_option("B", b_pos, "parameter b");
    cmd->add_option("--a", a_flag, "parameter a");
    cmd->add_option("--b", b_flag, "parameter b");
  }
  std::pair<int, int> resolve() const {
    const int a = a_flag >= 0 ? a_flag : a_pos;
    const int b = b_flag >= 0 ? b_flag : b_pos;
    if (a < 0 || b < 0)
      throw CLI::ValidationError("parameters a and b are required (>= 0)");
    return {a, b};
  }
};

crystal::RPoint3 parse_rational_triple(const std::string& text) {
  std::array<crystal::Rational, 3> out;
  std::stringstream ss(text);
  std::string part;
  int k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 3) throw std::runtime_error("expected three coordinates");
    out[k++] = crystal::Rational::parse(part);
  }
  if (k != 3) throw std::runtime_error("expected three coordinates");
  return out;
}

crystal::ConePoint parse_cone_point(const std::string& text) {
  long long vals[5];
  std::stringstream ss(text);
  std::string part;
  int k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 5) throw std::runtime_error("cone point needs five entries");
    vals[k++] = std::stoll(part);
  }
  if (k != 5) throw std::runtime_error("cone point needs five entries");
  return {vals[0], vals[1], vals[2], vals[3], vals[4]};
}

int run_generate(int a, int b, const std::string& out_path) {
  check_size(a, b);
  const crystal::ColoredDigraph g = crystal::build_rc(a, b);
  write_output(out_path, crystal::graph_to_json(g).dump() + "\n");
  std::cerr << "K(" << a << "," << b << "): " << g.vertex_count()
            << " vertices, " << g.edge_count() << " edges\n";
  return 0;
}

int run_classify(const std::string& in_path, const std::string& expect) {
  const auto loaded = crystal::graph_from_json_lenient(read_json_file(in_path));
  crystal::Classification cls;
  const crystal::ColoredDigraph* g = nullptr;
  if (loaded.violation) {
    cls = {crystal::Verdict::NotCrystal, *loaded.violation};
  } else {
    g = &*loaded.graph;
    cls = crystal::classify(*g);
  }
  std::cout << crystal::verdict_name(cls.verdict) << "\n";
  if (cls.witness)
    std::cout << crystal::witness_to_json(*cls.witness, g).dump() << "\n";
  if (!expect.empty() && expect != crystal::verdict_name(cls.verdict)) {
    std::cerr << "expected " << expect << ", got "
              << crystal::verdict_name(cls.verdict) << "\n";
    return 1;
  }
  return 0;
}

int run_stats(int a, int b, const std::string& u, const std::string& v) {
  check_size(a, b);
  const crystal::ColoredDigraph g = crystal::build_rc(a, b);
  const crystal::CrystalAnalysis an(g);
  const crystal::SailDecomposition dec = crystal::decompose(g, an);
  nlohmann::json out{
      {"a", a},
      {"b", b},
      {"vertices", g.vertex_count()},
      {"edges_per_color", g.edge_count(1)},
      {"critical", an.critical_vertices().size()},
      {"source", g.name(an.source())},
      {"sink", g.name(an.sink())},
      {"left_sail_count", dec.left_sails.size()},
      {"left_sail_size", dec.a},
      {"right_sail_count", dec.right_sails.size()},
      {"right_sail_size", dec.b},
  };
  if (!u.empty() || !v.empty()) {
    if (u.empty() || v.empty())
      throw std::runtime_error("join/meet queries need both --u and --v");
    const crystal::PosetView view(g);
    const crystal::Vertex vu = g.vertex(u);
    const crystal::Vertex vv = g.vertex(v);
    out["pair"] = {{"u", u},
                   {"v", v},
                   {"join", g.name(view.join(vu, vv))},
                   {"meet", g.name(view.meet(vu, vv))},
                   {"leq", view.leq(vu, vv)},
                   {"geq", view.leq(vv, vu)}};
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_gt(int a, int b, const std::string& contains) {
  check_size(a, b);
  if (!contains.empty()) {
    const bool inside =
        crystal::polytope_contains(a, b, parse_rational_triple(contains));
    std::cout << nlohmann::json{{"a", a}, {"b", b}, {"contains", inside}}.dump()
              << "\n";
    return 0;
  }
  nlohmann::json arrays = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (const crystal::GtArray& m : crystal::gt_arrays(a, b)) {
    arrays.push_back({m.x, m.y, m.z});
    const auto moves = crystal::gt_moves(a, b, m);
    if (moves.edge1)
      edges.push_back({{"tail", {m.x, m.y, m.z}},
                       {"head", {moves.edge1->x, moves.edge1->y, moves.edge1->z}},
                       {"color", 1}});
    if (moves.edge2)
      edges.push_back({{"tail", {m.x, m.y, m.z}},
                       {"head", {moves.edge2->x, moves.edge2->y, moves.edge2->z}},
                       {"color", 2}});
  }
  nlohmann::json out{{"a", a},
                     {"b", b},
                     {"border", {a + b, a, 0}},
                     {"arrays", std::move(arrays)},
                     {"edges", std::move(edges)}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_cone_encode(int a, int b, const std::string& vertex) {
  check_size(a, b);
  crystal::UniversalCone cone;
  const crystal::ConePoint p = cone.encode(a, b, vertex);
  nlohmann::json out{{"a", a},
                     {"b", b},
                     {"vertex", vertex},
                     {"point", {p.len, p.pos, p.crit, p.down, p.up}}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_cone_decode(const std::string& point) {
  const crystal::ConePoint p = parse_cone_point(point);
  const crystal::ConeDecoded d = crystal::cone_decode_name(p);
  check_size(d.a, d.b);
  nlohmann::json out{{"a", d.a},
                     {"b", d.b},
                     {"vertex", d.vertex_name},
                     {"point", {p.len, p.pos, p.crit, p.down, p.up}}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_export(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
  const crystal::ColoredDigraph g =
      crystal::graph_from_json(read_json_file(in_path));
  if (format == "json") {
    write_output(out_path, crystal::graph_to_json(g).dump() + "\n");
    return 0;
  }
  const crystal::CrystalAnalysis an(g);
  write_output(out_path, crystal::graph_to_dot(g, an));
  return 0;
}

int run_verify(int a, int b, bool serial, bool skip_mutations) {
  check_size(a, b);
  crystal::verify::Options opts;
  opts.parallel = !serial;
  opts.mutations = !skip_mutations;
  const auto checks = crystal::verify::run_all(a, b, opts);
  bool all_pass = true;
  for (const auto& check : checks) {
    nlohmann::json line{{"check", check.name}, {"pass", check.pass()}};
    if (!check.pass()) line["detail"] = *check.failure;
    std::cout << line.dump() << "\n";
    std::cerr << (check.pass() ? "PASS " : "FAIL ") << check.name;
    if (!check.pass()) std::cerr << ": " << *check.failure;
    std::cerr << "\n";
    all_pass = all_pass && check.pass();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular 2-colored crystal graphs: construction, "
               "classification, lattices, arrays and the universal cone"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "emit K(a,b) as graph JSON");
  ParamPair gen_params;
  gen_params.attach(generate);
  std::string gen_out;
  generate->add_option("--out", gen_out, "output file (default stdout)");

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a graph JSON file");
  std::string cls_in, cls_expect;
  classify_cmd->add_option("FILE", cls_in, "input graph JSON");
  classify_cmd->add_option("--in", cls_in, "input graph JSON");
  classify_cmd->add_option("--expect", cls_expect,
                           "fail unless the verdict matches");

  auto* stats = app.add_subcommand("stats", "vertex/edge/critical statistics");
  ParamPair stats_params;
  stats_params.attach(stats);
  std::string stats_u, stats_v;
  stats->add_option("--u", stats_u, "first vertex of a join/meet query");
  stats->add_option("--v", stats_v, "second vertex of a join/meet query");

  auto* gt = app.add_subcommand(
      "gt", "triangular arrays with border (a+b,a,0) and their crystal edges");
  ParamPair gt_params;
  gt_params.attach(gt);
  std::string gt_contains;
  gt->add_option("--contains", gt_contains,
                 "test polytope membership of 'x,y,z' (exact rationals p/q)");

  auto* cone = app.add_subcommand("cone", "universal-cone conversions");
  cone->require_subcommand(1);
  auto* cone_encode = cone->add_subcommand("encode", "vertex -> cone point");
  ParamPair cone_params;
  cone_params.attach(cone_encode);
  std::string cone_vertex;
  cone_encode->add_option("--vertex", cone_vertex, "canonical vertex id")
      ->required();
  auto* cone_decode = cone->add_subcommand("decode", "cone point -> vertex");
  std::string cone_point;
  cone_decode->add_option("POINT", cone_point, "comma-separated 5-tuple");
  cone_decode->add_option("--point", cone_point, "comma-separated 5-tuple");

  auto* exp = app.add_subcommand("export", "re-emit a graph file as JSON or DOT");
  std::string exp_in, exp_out, exp_format = "dot";
  exp->add_option("FILE", exp_in, "input graph JSON");
  exp->add_option("--in", exp_in, "input graph JSON");
  exp->add_option("--out", exp_out, "output file (default stdout)");
  exp->add_option("--format", exp_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* verify = app.add_subcommand("verify", "run the invariant suite for (a,b)");
  ParamPair verify_params;
  verify_params.attach(verify);
  bool verify_serial = false, verify_skip_mut = false;
  verify->add_flag("--serial", verify_serial,
                   "use the serial reference kernels");
  verify->add_flag("--skip-mutations", verify_skip_mut,
                   "skip the edge-deletion scan");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      auto [a, b] = gen_params.resolve();
      return run_generate(a, b, gen_out);
    }
    if (classify_cmd->parsed()) {
      if (cls_in.empty()) throw std::runtime_error("classify needs an input file");
      return run_classify(cls_in, cls_expect);
    }
    if (stats->parsed()) {
      auto [a, b] = stats_params.resolve();
      return run_stats(a, b, stats_u, stats_v);
    }
    if (gt->parsed()) {
      auto [a, b] = gt_params.resolve();
      return run_gt(a, b, gt_contains);
    }
    if (cone->parsed()) {
      if (cone_encode->parsed()) {
        auto [a, b] = cone_params.resolve();
        return run_cone_encode(a, b, cone_vertex);
      }
      if (cone_point.empty())
        throw std::runtime_error("cone decode needs a point");
      return run_cone_decode(cone_point);
    }
    if (exp->parsed()) {
      if (exp_in.empty()) throw std::runtime_error("export needs an input file");
      return run_export(exp_in, exp_format, exp_out);
    }
    if (verify->parsed()) {
      auto [a, b] = verify_params.resolve();
      return run_verify(a, b, verify_serial, verify_skip_mut);
    }
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
