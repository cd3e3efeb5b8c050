// dg: command-line front end for the point-world geometry engine.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pointworld/bisection.hpp"
#include "pointworld/enumeration.hpp"
#include "pointworld/figures.hpp"
#include "pointworld/lines.hpp"
#include "pointworld/podgon.hpp"
#include "pointworld/theory.hpp"
#include "pointworld/world.hpp"

namespace {

using namespace pointworld;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

World load_world(const std::string& path) { return parse_world(read_file(path)); }

FeatureBounds parse_bounds(const std::string& text) {
  FeatureBounds b;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "bad bounds entry '" + part + "'");
    std::string key = part.substr(0, eq);
    int value = std::stoi(part.substr(eq + 1));
    if (key == "straight") b.straight = value;
    else if (key == "curved") b.curved = value;
    else if (key == "vertices") b.vertices = value;
    else throw Error(ErrorKind::SyntaxError, "unknown bounds key '" + key + "'");
  }
  return b;
}

SearchPredicate predicate_named(const std::string& name) {
  if (name == "all-A-bisectable") return SearchPredicate::AllABisectable;
  if (name == "all-B-bisectable-P") return SearchPredicate::AllBBisectableP;
  if (name == "all-B-bisectable-N") return SearchPredicate::AllBBisectableN;
  if (name == "has-NC-triangle") return SearchPredicate::HasNCTriangle;
  if (name == "has-equilateral-NC-triangle") return SearchPredicate::HasEquilateralNCTriangle;
  if (name == "all-pairs-circle") return SearchPredicate::AllPairsCircle;
  throw Error(ErrorKind::SyntaxError, "unknown predicate '" + name + "'");
}

void print_triangle(std::ostream& out, const TriangleSpec& t) {
  out << "TRI " << t.vertices[0] << ',' << t.vertices[1] << ',' << t.vertices[2] << " sides=";
  for (std::size_t i = 0; i < t.sides.size(); ++i) {
    if (i) out << '|';
    out << t.sides[i].str();
  }
  auto len = t.side_lengths();
  out << " lengths=" << len[0] << ',' << len[1] << ',' << len[2] << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"discrete point-world geometry engine"};
  app.require_subcommand(1);

  std::string world_path, from, to, def_kind = "A", halves = "P", center, pair_arg;
  std::string line_kind = "N", tri_kind = "NC", predicate_name, theory_mode, theory_path;
  std::string claim_id, def_text, def2_text, shape_text, table_path, bounds_text;
  int radius = 1, points_n = 0, max_points = 6, workers = 1;
  bool maximal = false, zero = false, equilateral_only = false, up_to_iso = false;

  auto* lines_cmd = app.add_subcommand("lines", "straight-line segments of a world");
  lines_cmd->add_option("world", world_path)->required();
  lines_cmd->add_option("--kind", line_kind)->check(CLI::IsMember({"P", "N"}));
  lines_cmd->add_flag("--maximal", maximal);

  auto* bisect_cmd = app.add_subcommand("bisect", "bisect the geodesics between two points");
  bisect_cmd->add_option("world", world_path)->required();
  bisect_cmd->add_option("--from", from)->required();
  bisect_cmd->add_option("--to", to)->required();
  bisect_cmd->add_option("--def", def_kind)->required()->check(CLI::IsMember({"A", "B"}));
  bisect_cmd->add_option("--halves", halves)->check(CLI::IsMember({"P", "N"}));

  auto* circle_cmd = app.add_subcommand("circle", "points of a circle");
  circle_cmd->add_option("world", world_path)->required();
  circle_cmd->add_option("--center", center)->required();
  circle_cmd->add_option("--radius", radius)->required();
  circle_cmd->add_flag("--zero", zero);

  auto* through_cmd = app.add_subcommand("circles-through", "circles containing both points");
  through_cmd->add_option("world", world_path)->required();
  through_cmd->add_option("--pair", pair_arg)->required();

  auto* tri_cmd = app.add_subcommand("triangles", "triangles of a world");
  tri_cmd->add_option("world", world_path)->required();
  tri_cmd->add_option("--kind", tri_kind)->check(CLI::IsMember({"C", "NC"}));
  tri_cmd->add_flag("--equilateral", equilateral_only);

  auto* parity_cmd = app.add_subcommand("parity", "bisection parity report");
  parity_cmd->add_option("world", world_path)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "all unit undirected worlds on n points");
  enum_cmd->add_option("--points", points_n)->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso);
  enum_cmd->add_option("--max-points", max_points);

  auto* search_cmd = app.add_subcommand("search", "exhaustive world search");
  search_cmd->add_option("--points", points_n)->required();
  search_cmd->add_option("--where", predicate_name)->required();
  search_cmd->add_flag("--up-to-iso", up_to_iso);
  search_cmd->add_option("--max-points", max_points);
  search_cmd->add_option("--workers", workers);

  auto* theory_cmd = app.add_subcommand("theory", "assumption-digging diagrams");
  theory_cmd->add_option("mode", theory_mode)
      ->required()
      ->check(CLI::IsMember({"check", "foundation", "render"}));
  theory_cmd->add_option("file", theory_path)->required();
  theory_cmd->add_option("--claim", claim_id);

  auto* podgon_cmd = app.add_subcommand("podgon", "definition-game engine");
  std::string podgon_mode;
  podgon_cmd->add_option("mode", podgon_mode)
      ->required()
      ->check(CLI::IsMember({"eval", "test", "discriminate", "entails"}));
  podgon_cmd->add_option("--def", def_text);
  podgon_cmd->add_option("--def2", def2_text);
  podgon_cmd->add_option("--shape", shape_text);
  podgon_cmd->add_option("--table", table_path);
  podgon_cmd->add_option("--bounds", bounds_text);

  CLI11_PARSE(app, argc, argv);

  if (lines_cmd->parsed()) {
    World world = load_world(world_path);
    std::vector<Walk> segs = maximal
        ? maximal_lines(world)
        : straight_segments(world, line_kind == "P" ? LineKind::P : LineKind::N);
    for (const auto& s : segs) std::cout << s.str() << "\n";
    return 0;
  }

  if (bisect_cmd->parsed()) {
    World world = load_world(world_path);
    auto segs = geodesics(world, from, to);
    if (segs.empty()) {
      std::cout << "no straight line from " << from << " to " << to << "\n";
      return 1;
    }
    bool all_ok = true;
    for (const auto& s : segs) {
      std::cout << "SEG " << s.str() << ":";
      if (def_kind == "A") {
        auto pts = a_bisection_points(world, s);
        if (pts.empty()) {
          std::cout << " none";
          all_ok = false;
        }
        for (const auto& [m, label] : pts) std::cout << ' ' << label;
      } else {
        auto cuts = b_bisection_cuts(world, s,
                                     halves == "P" ? HalfPolicy::P : HalfPolicy::N);
        if (cuts.empty()) {
          std::cout << " none";
          all_ok = false;
        }
        for (std::size_t m : cuts) {
          Walk left{std::vector<std::string>(s.points.begin(), s.points.begin() + m + 1), 0};
          Walk right{std::vector<std::string>(s.points.begin() + m + 1, s.points.end()), 0};
          std::cout << " cut@" << m << '(' << left.str() << '|' << right.str() << ')';
        }
      }
      std::cout << "\n";
    }
    return all_ok ? 0 : 1;
  }

  if (circle_cmd->parsed()) {
    World world = load_world(world_path);
    CircleSpec spec{center, radius, zero ? ZeroPolicy::Z : ZeroPolicy::NZ};
    for (const auto& p : circle_points(world, spec)) std::cout << p << "\n";
    return 0;
  }

  if (through_cmd->parsed()) {
    World world = load_world(world_path);
    auto comma = pair_arg.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "--pair needs '<p>,<p>'");
    std::string u = pair_arg.substr(0, comma);
    std::string v = pair_arg.substr(comma + 1);
    for (const auto& [c, r] : circles_through(world, u, v))
      std::cout << c << ' ' << r << "\n";
    return 0;
  }

  if (tri_cmd->parsed()) {
    World world = load_world(world_path);
    TriangleKind kind = tri_kind == "C" ? TriangleKind::C : TriangleKind::NC;
    auto tris = equilateral_only ? equilateral_triangles(world, kind) : triangles(world, kind);
    for (const auto& t : tris) print_triangle(std::cout, t);
    return 0;
  }

  if (parity_cmd->parsed()) {
    World world = load_world(world_path);
    ParityReport report = parity_report(world);
    std::cout << report.text;
    return report.pass ? 0 : 1;
  }

  if (enum_cmd->parsed()) {
    auto worlds = enumerate_worlds(points_n, up_to_iso, max_points);
    std::cout << "count " << worlds.size() << "\n";
    for (const auto& w : worlds) std::cout << "\n" << w.to_file();
    return 0;
  }

  if (search_cmd->parsed()) {
    SearchQuery query{points_n, predicate_named(predicate_name), up_to_iso, max_points};
    SearchResult result = search_worlds(query, workers);
    std::cout << "count " << result.count << "\n";
    for (const auto& w : result.worlds) std::cout << "\n" << w.to_file();
    return 0;
  }

  if (theory_cmd->parsed()) {
    TheoryGraph graph = parse_theory(read_file(theory_path));
    if (theory_mode == "check") {
      auto cycles = detect_cycles(graph);
      auto unjustified = unjustified_claims(graph);
      for (const auto& cycle : cycles) {
        std::cout << "CYCLE";
        for (const auto& id : cycle) std::cout << ' ' << id << " ->";
        std::cout << ' ' << cycle.front() << "\n";
      }
      for (const auto& id : unjustified) std::cout << "UNJUSTIFIED " << id << "\n";
      if (cycles.empty() && unjustified.empty()) {
        std::cout << "OK\n";
        return 0;
      }
      return 1;
    }
    if (claim_id.empty())
      throw Error(ErrorKind::SyntaxError, "--claim is required for " + theory_mode);
    if (theory_mode == "foundation") {
      for (const auto& id : foundation(graph, claim_id))
        std::cout << id << " [" << to_string(graph.require(id).kind) << "]\n";
      return 0;
    }
    std::cout << render_tree(graph, claim_id);
    return 0;
  }

  if (podgon_cmd->parsed()) {
    FeatureBounds bounds = bounds_text.empty() ? FeatureBounds{} : parse_bounds(bounds_text);
    auto need = [](const std::string& v, const char* flag) {
      if (v.empty()) throw Error(ErrorKind::SyntaxError, std::string(flag) + " is required");
      return v;
    };
    if (podgon_mode == "eval") {
      ExprPtr e = parse_definition(need(def_text, "--def"));
      ShapeDescription s = parse_shape(need(shape_text, "--shape"));
      bool v = evaluate(e, s);
      std::cout << (v ? "true" : "false") << "\n";
      return v ? 0 : 1;
    }
    if (podgon_mode == "test") {
      ExprPtr e = parse_definition(need(def_text, "--def"));
      auto examples = parse_example_table(read_file(need(table_path, "--table")));
      ConsistencyResult r = consistent(e, examples);
      if (r.ok) {
        std::cout << "OK\n";
        return 0;
      }
      std::cout << "COUNTEREXAMPLE " << r.shape.str() << " expected="
                << (r.expected ? "member" : "nonmember") << " got="
                << (r.got ? "member" : "nonmember") << "\n";
      return 1;
    }
    ExprPtr e1 = parse_definition(need(def_text, "--def"));
    ExprPtr e2 = parse_definition(need(def2_text, "--def2"));
    if (podgon_mode == "discriminate") {
      for (const auto& s : discriminating_shapes(e1, e2, bounds))
        std::cout << s.str() << "\n";
      return 0;
    }
    EntailmentResult r = entails(e1, e2, bounds);
    if (r.holds) {
      std::cout << "true\n";
      return 0;
    }
    std::cout << "false witness=" << r.witness->str() << "\n";
    return 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pointworld::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == pointworld::ErrorKind::CyclicDependency ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
