#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pointworld/lines.hpp"
#include "pointworld/world.hpp"

namespace pointworld {

// Half policy for B-bisection: P allows single-point halves, N forbids them.
enum class HalfPolicy { P, N };

namespace detail {

// Cumulative weights along a segment; also enforces the N-segment
// precondition shared by the bisection operations.
inline std::vector<int> segment_prefix_weights(const World& world, const Walk& segment) {
  if (segment.points.size() < 2)
    throw Error(ErrorKind::NotASegment, "single-point walk is not an N-segment");
  Walk checked = make_walk(world, segment.points);
  if (!is_geodesic(world, checked))
    throw Error(ErrorKind::NotASegment, checked.str() + " is not a geodesic");
  std::vector<int> prefix{0};
  for (std::size_t i = 1; i < checked.points.size(); ++i) {
    auto w = world.step_weight(world.index_of(checked.points[i - 1]),
                               world.index_of(checked.points[i]));
    prefix.push_back(prefix.back() + *w);
  }
  return prefix;
}

}  // namespace detail

// Interior positions m where the prefix p0..pm and the suffix pm..pk carry
// equal weight; the two halves share exactly the cut point.
inline std::vector<std::pair<std::size_t, std::string>> a_bisection_points(
    const World& world, const Walk& segment) {
  auto prefix = detail::segment_prefix_weights(world, segment);
  const int total = prefix.back();
  std::vector<std::pair<std::size_t, std::string>> out;
  for (std::size_t m = 1; m + 1 < segment.points.size(); ++m)
    if (prefix[m] == total - prefix[m]) out.emplace_back(m, segment.points[m]);
  return out;
}

// Cut positions m (the connection between pm and pm+1) splitting the segment
// into two disjoint halves of equal weight.
inline std::vector<std::size_t> b_bisection_cuts(const World& world, const Walk& segment,
                                                 HalfPolicy halves) {
  auto prefix = detail::segment_prefix_weights(world, segment);
  const int total = prefix.back();
  const std::size_t k = segment.points.size() - 1;
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < k; ++m) {
    int left = prefix[m];
    int right = total - prefix[m + 1];
    if (left != right) continue;
    if (halves == HalfPolicy::N && (m < 1 || k - (m + 1) < 1)) continue;
    out.push_back(m);
  }
  return out;
}

inline bool all_segments_a_bisectable(const World& world) {
  for (const auto& s : straight_segments(world, LineKind::N))
    if (a_bisection_points(world, s).empty()) return false;
  return true;  // vacuously true on edgeless worlds
}

inline bool all_segments_b_bisectable(const World& world, HalfPolicy halves) {
  for (const auto& s : straight_segments(world, LineKind::N))
    if (b_bisection_cuts(world, s, halves).empty()) return false;
  return true;
}

// Per-segment parity report for unit-weight worlds. PASS means A-bisectable
// coincides with odd point count and B(P)-bisectable with even point count on
// every N-segment.
struct ParityReport {
  std::string text;
  bool pass = true;
};

inline ParityReport parity_report(const World& world) {
  if (!world.unit_weights())
    throw Error(ErrorKind::NonUnitWeights, "parity report requires unit weights");
  ParityReport report;
  std::ostringstream out;
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& s : straight_segments(world, LineKind::N)) {
    const std::size_t count = s.points.size();
    bool a = !a_bisection_points(world, s).empty();
    bool bp = !b_bisection_cuts(world, s, HalfPolicy::P).empty();
    bool bn = !b_bisection_cuts(world, s, HalfPolicy::N).empty();
    out << "SEG " << s.str() << " points=" << count << " A=" << yesno(a)
        << " B/P=" << yesno(bp) << " B/N=" << yesno(bn) << "\n";
    if (a != (count % 2 == 1) || bp != (count % 2 == 0)) report.pass = false;
  }
  out << "VERDICT " << (report.pass ? "PASS" : "FAIL") << "\n";
  report.text = out.str();
  return report;
}

}  // namespace pointworld
