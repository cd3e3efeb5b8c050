#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pointworld/lines.hpp"
#include "pointworld/world.hpp"

namespace pointworld {

// Zero-radius policy: NZ requires radius >= 1, Z permits radius 0.
enum class ZeroPolicy { NZ, Z };

struct CircleSpec {
  std::string center;
  int radius = 1;
  ZeroPolicy zero_policy = ZeroPolicy::NZ;
};

// Triangle kind: C admits collinear vertex triples, NC forbids them.
enum class TriangleKind { C, NC };

// Three vertices plus one chosen geodesic per vertex pair. Identity is the
// full spec: the same triple with different side choices is a different
// triangle.
struct TriangleSpec {
  std::array<std::string, 3> vertices;  // sorted
  std::array<Walk, 3> sides;            // sorted by point sequence

  bool operator==(const TriangleSpec& o) const {
    return vertices == o.vertices && sides == o.sides;
  }
  bool operator<(const TriangleSpec& o) const {
    if (vertices != o.vertices) return vertices < o.vertices;
    return sides < o.sides;
  }
  std::array<int, 3> side_lengths() const {
    return {sides[0].length, sides[1].length, sides[2].length};
  }
};

// The set of points at exactly radius distance from the center, measured FROM
// the center in directed worlds. The center itself appears only under Z with
// radius 0.
inline std::vector<std::string> circle_points(const World& world, const CircleSpec& spec) {
  if (spec.radius == 0 && spec.zero_policy == ZeroPolicy::NZ)
    throw Error(ErrorKind::ZeroRadiusUnderNZ, "radius 0 needs the Z policy");
  if (spec.radius < 0)
    throw Error(ErrorKind::BadFamilyParameter, "negative radius");
  std::vector<std::string> out;
  for (const auto& x : world.points()) {
    Distance d = distance(world, spec.center, x);
    if (d && *d == spec.radius) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All (center, radius) pairs with radius >= 1 whose circle contains both u
// and v, sorted by center label then radius.
inline std::vector<std::pair<std::string, int>> circles_through(const World& world,
                                                                std::string_view u,
                                                                std::string_view v) {
  if (u == v) throw Error(ErrorKind::BadFamilyParameter, "pair points must differ");
  world.index_of(u);
  world.index_of(v);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& c : world.points()) {
    Distance du = distance(world, c, u);
    Distance dv = distance(world, c, v);
    if (du && dv && *du == *dv && *du >= 1) out.emplace_back(c, *du);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Side candidates for one unordered vertex pair: geodesics in both
// directions, deduplicated up to reversal, smaller orientation kept.
inline std::vector<Walk> side_candidates(const World& world, const std::string& u,
                                         const std::string& v) {
  std::map<std::vector<std::string>, Walk> by_key;
  auto add = [&](Walk w) {
    std::vector<std::string> rev(w.points.rbegin(), w.points.rend());
    std::vector<std::string> key = std::min(w.points, rev);
    auto [it, inserted] = by_key.emplace(key, w);
    if (!inserted && w.points < it->second.points) it->second = std::move(w);
  };
  for (auto& g : geodesics(world, u, v)) add(std::move(g));
  for (auto& g : geodesics(world, v, u)) add(std::move(g));
  std::vector<Walk> out;
  for (auto& [key, w] : by_key) out.push_back(std::move(w));
  return out;
}

// A triple is collinear when some geodesic of the world carries all three
// labels in its point sequence.
inline bool collinear(const std::vector<Walk>& segments, const std::string& a,
                      const std::string& b, const std::string& c) {
  for (const auto& s : segments) {
    auto has = [&s](const std::string& p) {
      return std::find(s.points.begin(), s.points.end(), p) != s.points.end();
    };
    if (has(a) && has(b) && has(c)) return true;
  }
  return false;
}

}  // namespace detail

// Every vertex triple with every choice of one geodesic side per pair,
// canonicalized and sorted. Kind NC drops collinear triples.
inline std::vector<TriangleSpec> triangles(const World& world, TriangleKind kind) {
  const auto& pts = world.points();
  std::vector<std::string> sorted_pts = pts;
  std::sort(sorted_pts.begin(), sorted_pts.end());
  std::vector<Walk> all_segments;
  if (kind == TriangleKind::NC) all_segments = straight_segments(world, LineKind::N);

  std::vector<TriangleSpec> out;
  const std::size_t n = sorted_pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::string &a = sorted_pts[i], &b = sorted_pts[j], &c = sorted_pts[k];
        if (kind == TriangleKind::NC && detail::collinear(all_segments, a, b, c))
          continue;
        auto ab = detail::side_candidates(world, a, b);
        if (ab.empty()) continue;
        auto bc = detail::side_candidates(world, b, c);
        if (bc.empty()) continue;
        auto ac = detail::side_candidates(world, a, c);
        if (ac.empty()) continue;
        for (const auto& s1 : ab)
          for (const auto& s2 : bc)
            for (const auto& s3 : ac) {
              TriangleSpec t;
              t.vertices = {a, b, c};
              t.sides = {s1, s2, s3};
              std::sort(t.sides.begin(), t.sides.end());
              out.push_back(std::move(t));
            }
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<TriangleSpec> equilateral_triangles(const World& world, TriangleKind kind) {
  std::vector<TriangleSpec> out;
  for (auto& t : triangles(world, kind)) {
    auto len = t.side_lengths();
    if (len[0] == len[1] && len[1] == len[2]) out.push_back(std::move(t));
  }
  return out;
}

// At least two equal side lengths; equilateral triangles count as isosceles.
inline bool is_isosceles(const TriangleSpec& triangle) {
  auto len = triangle.side_lengths();
  return len[0] == len[1] || len[1] == len[2] || len[0] == len[2];
}

}  // namespace pointworld
