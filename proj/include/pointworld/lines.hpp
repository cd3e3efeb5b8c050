#pragma once

#include <algorithm>
#include <vector>

#include "pointworld/world.hpp"

namespace pointworld {

// P-lines admit single-point segments; N-lines require at least two points.
enum class LineKind { P, N };

// Canonical representative of a segment: in undirected worlds a walk and its
// reversal are the same segment, so pick the lexicographically smaller
// orientation (it starts at the smaller endpoint).
inline Walk canonical_segment(Walk walk, bool undirected) {
  if (undirected) {
    std::vector<std::string> rev(walk.points.rbegin(), walk.points.rend());
    if (rev < walk.points) walk.points = std::move(rev);
  }
  return walk;
}

// All straight-line segments of the world: geodesics over every point pair
// (each listed once up to reversal when the world is undirected), plus the
// single-point segments under kind P.
inline std::vector<Walk> straight_segments(const World& world, LineKind kind) {
  std::vector<Walk> out;
  const bool undirected = world.undirected();
  for (const auto& u : world.points()) {
    if (kind == LineKind::P) out.push_back(Walk{{u}, 0});
    for (const auto& v : world.points()) {
      if (u == v) continue;
      if (undirected && v < u) continue;
      for (auto& g : geodesics(world, u, v))
        out.push_back(canonical_segment(std::move(g), undirected));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// True iff inner's point sequence occurs contiguously in outer (or in outer
// reversed, when undirected).
inline bool is_subwalk(const Walk& inner, const Walk& outer, bool undirected) {
  auto occurs = [](const std::vector<std::string>& needle,
                   const std::vector<std::string>& hay) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
  };
  if (occurs(inner.points, outer.points)) return true;
  if (undirected) {
    std::vector<std::string> rev(outer.points.rbegin(), outer.points.rend());
    return occurs(inner.points, rev);
  }
  return false;
}

// N-segments that are not proper contiguous sub-walks (up to reversal) of any
// other N-segment: the world's analogue of Euclidean lines.
inline std::vector<Walk> maximal_lines(const World& world) {
  if (!world.undirected())
    throw Error(ErrorKind::DirectedUnsupported, "maximal lines require an undirected world");
  std::vector<Walk> segments = straight_segments(world, LineKind::N);
  std::vector<Walk> out;
  for (const auto& s : segments) {
    bool maximal = true;
    for (const auto& t : segments) {
      if (t.points.size() <= s.points.size()) continue;
      if (is_subwalk(s, t, /*undirected=*/true)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace pointworld
