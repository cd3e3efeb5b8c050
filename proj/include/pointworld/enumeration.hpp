#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "pointworld/bisection.hpp"
#include "pointworld/figures.hpp"
#include "pointworld/world.hpp"

namespace pointworld {

enum class Family { Path, Necklace, Edgeless, Pairs, Clique, DirectedDemo };

struct WorldFamily {
  Family family = Family::Path;
  int n = 0;
};

namespace detail {

inline std::string family_label(int i, char first) {
  int offset = first - 'A';
  if (offset + i < 26) return std::string(1, static_cast<char>('A' + offset + i));
  return "P" + std::to_string(i + 1);
}

inline std::vector<std::string> family_labels(int n, char first = 'A') {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(family_label(i, first));
  return out;
}

}  // namespace detail

// Canonical labeled world of a named family. Necklace labels start at D (the
// six-point necklace is D..I); the other families start at A.
inline World make_family(const WorldFamily& spec) {
  const int n = spec.n;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::BadFamilyParameter, what);
  };
  std::vector<Connection> conns;
  switch (spec.family) {
    case Family::Path: {
      need(n >= 1, "path needs n >= 1");
      auto labels = detail::family_labels(n);
      for (int i = 0; i + 1 < n; ++i) conns.push_back({labels[i], labels[i + 1], 1, false});
      return World("path" + std::to_string(n), labels, conns);
    }
    case Family::Necklace: {
      need(n >= 3, "necklace needs n >= 3");
      auto labels = detail::family_labels(n, 'D');
      for (int i = 0; i < n; ++i) conns.push_back({labels[i], labels[(i + 1) % n], 1, false});
      return World("necklace" + std::to_string(n), labels, conns);
    }
    case Family::Edgeless: {
      need(n >= 1, "edgeless needs n >= 1");
      return World("edgeless" + std::to_string(n), detail::family_labels(n), {});
    }
    case Family::Pairs: {
      need(n >= 2 && n % 2 == 0, "pairs needs even n >= 2");
      auto labels = detail::family_labels(n);
      for (int i = 0; i < n; i += 2) conns.push_back({labels[i], labels[i + 1], 1, false});
      return World("pairs" + std::to_string(n), labels, conns);
    }
    case Family::Clique: {
      need(n >= 1, "clique needs n >= 1");
      auto labels = detail::family_labels(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) conns.push_back({labels[i], labels[j], 1, false});
      return World("clique" + std::to_string(n), labels, conns);
    }
    case Family::DirectedDemo: {
      need(n == 0 || n == 4, "directed_demo is a fixed 4-point world");
      return World("directed_demo", {"A", "B", "C", "D"},
                   {{"A", "B", 1, true}, {"B", "C", 1, true}, {"A", "C", 2, false},
                    {"D", "C", 1, true}});
    }
  }
  throw Error(ErrorKind::BadFamilyParameter, "unknown family");
}

inline constexpr int kHardMaxPoints = 8;

namespace detail {

// Pairs (i,j), i < j, in lexicographic order; bit b of a mask selects pair b.
inline std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline World world_from_mask(int n, std::uint64_t mask) {
  auto labels = family_labels(n);
  auto pairs = pair_order(n);
  std::vector<Connection> conns;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (mask >> b & 1) conns.push_back({labels[pairs[b].first], labels[pairs[b].second], 1, false});
  return World("w" + std::to_string(mask), labels, conns);
}

inline std::string mask_bits(int n, std::uint64_t mask) {
  const int m = n * (n - 1) / 2;
  std::string s(m, '0');
  for (int b = 0; b < m; ++b)
    if (mask >> b & 1) s[b] = '1';
  return s;
}

inline std::uint64_t adjacency_mask(const World& world) {
  const int n = static_cast<int>(world.size());
  auto pairs = pair_order(n);
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (world.step_weight(pairs[b].first, pairs[b].second)) mask |= std::uint64_t{1} << b;
  return mask;
}

inline void check_enumerable(const World& world) {
  if (!world.undirected())
    throw Error(ErrorKind::DirectedUnsupported, "canonical form requires an undirected world");
  if (!world.unit_weights())
    throw Error(ErrorKind::NonUnitWeights, "canonical form requires unit weights");
  if (world.size() > kHardMaxPoints)
    throw Error(ErrorKind::TooLarge, "canonical form capped at " + std::to_string(kHardMaxPoints) + " points");
}

inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  auto pairs = pair_order(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  // Pair index lookup for permuted endpoints.
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (std::size_t b = 0; b < pairs.size(); ++b)
    pair_index[pairs[b].first][pairs[b].second] =
        pair_index[pairs[b].second][pairs[b].first] = static_cast<int>(b);
  do {
    std::uint64_t permuted = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1)
        permuted |= std::uint64_t{1} << pair_index[perm[pairs[b].first]][perm[pairs[b].second]];
    best = std::min(best, permuted);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// Label-permutation-invariant code (lexicographic minimum over all point
// permutations of the upper-triangle adjacency bit string). Equal codes mean
// isomorphic worlds.
inline std::string canonical_form(const World& world) {
  detail::check_enumerable(world);
  const int n = static_cast<int>(world.size());
  return detail::mask_bits(n, detail::canonical_mask(n, detail::adjacency_mask(world)));
}

// All unit undirected simple worlds on n labeled points, in connection-mask
// order; with up_to_iso, only the minimal representative of each isomorphism
// class.
inline std::vector<World> enumerate_worlds(int n, bool up_to_iso, int max_points = 6) {
  if (n < 1 || n > max_points || n > kHardMaxPoints)
    throw Error(ErrorKind::TooLarge, "point count " + std::to_string(n) + " out of range");
  const int m = n * (n - 1) / 2;
  std::vector<World> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (up_to_iso && detail::canonical_mask(n, mask) != mask) continue;
    out.push_back(detail::world_from_mask(n, mask));
  }
  return out;
}

enum class SearchPredicate {
  AllABisectable,
  AllBBisectableP,
  AllBBisectableN,
  HasNCTriangle,
  HasEquilateralNCTriangle,
  AllPairsCircle,
};

struct SearchQuery {
  int n = 0;
  SearchPredicate predicate = SearchPredicate::AllABisectable;
  bool up_to_iso = false;
  int max_points = 6;
};

inline bool evaluate_predicate(const World& world, SearchPredicate p) {
  switch (p) {
    case SearchPredicate::AllABisectable:
      return all_segments_a_bisectable(world);
    case SearchPredicate::AllBBisectableP:
      return all_segments_b_bisectable(world, HalfPolicy::P);
    case SearchPredicate::AllBBisectableN:
      return all_segments_b_bisectable(world, HalfPolicy::N);
    case SearchPredicate::HasNCTriangle:
      return !triangles(world, TriangleKind::NC).empty();
    case SearchPredicate::HasEquilateralNCTriangle:
      return !equilateral_triangles(world, TriangleKind::NC).empty();
    case SearchPredicate::AllPairsCircle: {
      for (const auto& u : world.points())
        for (const auto& v : world.points()) {
          if (u >= v) continue;
          if (circles_through(world, u, v).empty()) return false;
        }
      return true;
    }
  }
  return false;
}

struct SearchResult {
  std::size_t count = 0;
  std::vector<World> worlds;
};

// Exhaustive scan over enumerate_worlds(n). Workers shard the enumeration
// index range; results are merged in index order, so output is independent of
// the worker count.
inline SearchResult search_worlds(const SearchQuery& query, int workers = 1) {
  std::vector<World> all = enumerate_worlds(query.n, query.up_to_iso, query.max_points);
  std::vector<char> keep(all.size(), 0);
  if (workers < 1) workers = 1;
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      keep[i] = evaluate_predicate(all[i], query.predicate) ? 1 : 0;
  };
  if (workers == 1 || all.size() < 2) {
    run(0, all.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (all.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = std::min(all.size(), w * chunk);
      std::size_t end = std::min(all.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  SearchResult result;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) {
      ++result.count;
      result.worlds.push_back(std::move(all[i]));
    }
  return result;
}

}  // namespace pointworld
