#include "catch2/catch_amalgamated.hpp"

#include <map>
#include <set>

#include "pointworld/enumeration.hpp"
#include "pointworld/figures.hpp"

using namespace pointworld;

namespace {

// The six-point path world of the circle dialogue: D-E-F-G-H-I.
World path_d_to_i() {
  return parse_world(
      "points D E F G H I\nedge D E\nedge E F\nedge F G\nedge G H\nedge H I\n");
}

}  // namespace

TEST_CASE("circle points in the path world") {
  World w = path_d_to_i();
  CHECK(circle_points(w, {"G", 1, ZeroPolicy::NZ}) == std::vector<std::string>{"F", "H"});
  CHECK(circle_points(w, {"D", 1, ZeroPolicy::NZ}) == std::vector<std::string>{"E"});
}

TEST_CASE("zero radius needs the Z policy") {
  World w = path_d_to_i();
  CHECK_THROWS_AS(circle_points(w, {"G", 0, ZeroPolicy::NZ}), Error);
  CHECK(circle_points(w, {"G", 0, ZeroPolicy::Z}) == std::vector<std::string>{"G"});
}

TEST_CASE("necklace circles use shortest-path distance") {
  World c6 = make_family({Family::Necklace, 6});
  CHECK(circle_points(c6, {"D", 1, ZeroPolicy::NZ}) == std::vector<std::string>{"E", "I"});
  CHECK(circle_points(c6, {"D", 2, ZeroPolicy::NZ}) == std::vector<std::string>{"F", "H"});
  CHECK(circle_points(c6, {"D", 3, ZeroPolicy::NZ}) == std::vector<std::string>{"G"});
  CHECK(circle_points(c6, {"D", 4, ZeroPolicy::NZ}).empty());
}

TEST_CASE("circle_points agrees with a brute-force distance filter") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : enumerate_worlds(n, false)) {
      int total = 0;
      for (const auto& c : w.connections()) total += c.weight;
      for (const auto& center : w.points())
        for (int r = 1; r <= total; ++r) {
          std::vector<std::string> expected;
          for (const auto& x : w.points()) {
            Distance d = distance(w, center, x);
            if (d && *d == r) expected.push_back(x);
          }
          CHECK(circle_points(w, {center, r, ZeroPolicy::NZ}) == expected);
        }
    }
  }
}

TEST_CASE("path-world NZ circles have at most two points") {
  World w = path_d_to_i();
  for (const auto& center : w.points())
    for (int r = 1; r <= 5; ++r)
      CHECK(circle_points(w, {center, r, ZeroPolicy::NZ}).size() <= 2);
}

TEST_CASE("circles through pairs in the path world") {
  World w = path_d_to_i();
  CHECK(circles_through(w, "D", "G").empty());
  CHECK(circles_through(w, "D", "F") ==
        std::vector<std::pair<std::string, int>>{{"E", 1}});
  // Nonempty exactly when the distance is even.
  for (const auto& u : w.points())
    for (const auto& v : w.points()) {
      if (u >= v) continue;
      Distance d = distance(w, u, v);
      CHECK(!circles_through(w, u, v).empty() == (*d % 2 == 0));
    }
}

TEST_CASE("odd necklaces have a circle for every pair") {
  World c5 = make_family({Family::Necklace, 5});
  for (const auto& u : c5.points())
    for (const auto& v : c5.points()) {
      if (u >= v) continue;
      CHECK_FALSE(circles_through(c5, u, v).empty());
    }
}

TEST_CASE("one-point circles exist in even necklaces only") {
  auto has_one_point_circle = [](const World& w, const std::string& x) {
    int total = 0;
    for (const auto& c : w.connections()) total += c.weight;
    for (const auto& center : w.points())
      for (int r = 1; r <= total; ++r)
        if (circle_points(w, {center, r, ZeroPolicy::NZ}) == std::vector<std::string>{x})
          return true;
    return false;
  };
  World c6 = make_family({Family::Necklace, 6});
  for (const auto& x : c6.points()) CHECK(has_one_point_circle(c6, x));
  World c5 = make_family({Family::Necklace, 5});
  for (const auto& x : c5.points()) CHECK_FALSE(has_one_point_circle(c5, x));
}

TEST_CASE("two distinct specs can share one point set") {
  // Exhaustive scan witness, e.g. {E} from (D,1) and (I,4) in the path world.
  World w = path_d_to_i();
  std::map<std::vector<std::string>, std::set<std::pair<std::string, int>>> by_set;
  for (const auto& center : w.points())
    for (int r = 1; r <= 5; ++r) {
      auto pts = circle_points(w, {center, r, ZeroPolicy::NZ});
      if (!pts.empty()) by_set[pts].insert({center, r});
    }
  bool witness = false;
  for (const auto& [pts, specs] : by_set)
    if (specs.size() >= 2) witness = true;
  CHECK(witness);
  CHECK(by_set[{"E"}].count({"D", 1}) == 1);
  CHECK(by_set[{"E"}].count({"I", 4}) == 1);
}

TEST_CASE("path worlds have no NC-triangles but do have C-triangles") {
  World p3 = make_family({Family::Path, 3});
  CHECK(triangles(p3, TriangleKind::NC).empty());
  auto c = triangles(p3, TriangleKind::C);
  REQUIRE(c.size() == 1);
  CHECK(c[0].vertices == std::array<std::string, 3>{"A", "B", "C"});
  // Sides A-B, B-C, and the long side A-B-C, which overlaps them entirely.
  CHECK(c[0].sides[0].str() == "A-B");
  CHECK(c[0].sides[1].str() == "A-B-C");
  CHECK(c[0].sides[2].str() == "B-C");
}

TEST_CASE("DFH is an equilateral NC-triangle of the six-point necklace") {
  World c6 = make_family({Family::Necklace, 6});
  auto nc = triangles(c6, TriangleKind::NC);
  bool found = false;
  for (const auto& t : nc)
    if (t.vertices == std::array<std::string, 3>{"D", "F", "H"}) {
      found = true;
      auto len = t.side_lengths();
      CHECK(len == std::array<int, 3>{2, 2, 2});
    }
  CHECK(found);

  auto eq = equilateral_triangles(c6, TriangleKind::NC);
  std::set<std::array<std::string, 3>> triples;
  for (const auto& t : eq) triples.insert(t.vertices);
  CHECK(triples == std::set<std::array<std::string, 3>>{{"D", "F", "H"}, {"E", "G", "I"}});
}

TEST_CASE("equilateral NC-triangles in necklaces need 3 | n") {
  for (int n = 3; n <= 9; ++n) {
    World cn = make_family({Family::Necklace, n});
    CHECK(!equilateral_triangles(cn, TriangleKind::NC).empty() == (n % 3 == 0));
  }
}

TEST_CASE("NC-triangle arc lengths in a necklace sum to n") {
  for (int n = 5; n <= 8; ++n) {
    World cn = make_family({Family::Necklace, n});
    for (const auto& t : triangles(cn, TriangleKind::NC)) {
      auto len = t.side_lengths();
      CHECK(len[0] + len[1] + len[2] == n);
    }
  }
}

TEST_CASE("isosceles triangles") {
  World c6 = make_family({Family::Necklace, 6});
  for (const auto& t : equilateral_triangles(c6, TriangleKind::NC))
    CHECK(is_isosceles(t));  // equilateral counts as isosceles

  // C7 has an NC-triangle with arcs 1,3,3; C9 one with arcs 2,3,4.
  auto arc_multiset = [](const TriangleSpec& t) {
    auto len = t.side_lengths();
    std::sort(len.begin(), len.end());
    return len;
  };
  World c7 = make_family({Family::Necklace, 7});
  bool saw_133 = false;
  for (const auto& t : triangles(c7, TriangleKind::NC))
    if (arc_multiset(t) == std::array<int, 3>{1, 3, 3}) {
      saw_133 = true;
      CHECK(is_isosceles(t));
    }
  CHECK(saw_133);

  World c9 = make_family({Family::Necklace, 9});
  bool saw_234 = false;
  for (const auto& t : triangles(c9, TriangleKind::NC))
    if (arc_multiset(t) == std::array<int, 3>{2, 3, 4}) {
      saw_234 = true;
      CHECK_FALSE(is_isosceles(t));
    }
  CHECK(saw_234);
}

TEST_CASE("side choice distinguishes triangles") {
  // Two geodesics between one pair give two distinct triangle specs.
  World w = parse_world(
      "points A B C D\nedge A B\nedge B C\nedge A D\nedge D C\nedge A C 2\n");
  // A-C has geodesics A-B-C, A-D-C, and the weight-2 connection A-C.
  auto gs = geodesics(w, "A", "C");
  CHECK(gs.size() == 3);
  auto tris = triangles(w, TriangleKind::C);
  std::map<std::array<std::string, 3>, int> per_triple;
  for (const auto& t : tris) ++per_triple[t.vertices];
  // Triple {A,B,C}: sides A-B and B-C are forced, but the A-C side can be any
  // of the three geodesics.
  CHECK(per_triple[{"A", "B", "C"}] == 3);
}

TEST_CASE("circle errors") {
  World w = path_d_to_i();
  CHECK_THROWS_AS(circle_points(w, {"Z", 1, ZeroPolicy::NZ}), Error);
  CHECK_THROWS_AS(circles_through(w, "D", "D"), Error);
  CHECK_THROWS_AS(circles_through(w, "D", "Z"), Error);
}
