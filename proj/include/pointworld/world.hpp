#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pointworld/error.hpp"

namespace pointworld {

// A direct link between two points. Undirected connections are traversable
// both ways; directed ones only from `from` to `to`.
struct Connection {
  std::string from;
  std::string to;
  int weight = 1;
  bool directed = false;
};

using Distance = std::optional<int>;  // nullopt = unreachable

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// A finite labeled point set with weighted, optionally directed connections.
// Immutable once constructed; all operations on it are pure.
class World {
 public:
  World(std::string name, std::vector<std::string> points,
        std::vector<Connection> connections, int decl_line = 0)
      : name_(std::move(name)), points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!valid_label(points_[i]))
        throw Error(ErrorKind::SyntaxError, "bad point label '" + points_[i] + "'", decl_line);
      if (!index_.emplace(points_[i], i).second)
        throw Error(ErrorKind::DuplicatePoint, points_[i], decl_line);
    }
    adjacency_.resize(points_.size());
    for (const auto& c : connections) add_connection(c, decl_line);
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Connection>& connections() const { return connections_; }
  std::size_t size() const { return points_.size(); }

  bool has_point(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
  }

  std::size_t index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
      throw Error(ErrorKind::UnknownPoint, std::string(label));
    return it->second;
  }

  const std::string& label_of(std::size_t i) const { return points_[i]; }

  // Outgoing (neighbor index, weight) pairs, sorted by neighbor index.
  const std::vector<std::pair<std::size_t, int>>& neighbors(std::size_t i) const {
    return adjacency_[i];
  }

  bool undirected() const { return directed_count_ == 0; }
  bool unit_weights() const { return nonunit_count_ == 0; }

  // Weight of the connection traversable from a to b, if any.
  std::optional<int> step_weight(std::size_t a, std::size_t b) const {
    for (const auto& [to, w] : adjacency_[a])
      if (to == b) return w;
    return std::nullopt;
  }

  // Canonical world-file rendering (weight printed only when > 1).
  std::string to_file() const {
    std::ostringstream out;
    if (!name_.empty()) out << "world " << name_ << "\n";
    out << "points";
    for (const auto& p : points_) out << ' ' << p;
    out << "\n";
    for (const auto& c : connections_) {
      out << (c.directed ? "arc " : "edge ") << c.from << ' ' << c.to;
      if (c.weight != 1) out << ' ' << c.weight;
      out << "\n";
    }
    return out.str();
  }

 private:
  void add_connection(const Connection& c, int line) {
    auto fi = index_.find(c.from);
    auto ti = index_.find(c.to);
    if (fi == index_.end()) throw Error(ErrorKind::UnknownPoint, c.from, line);
    if (ti == index_.end()) throw Error(ErrorKind::UnknownPoint, c.to, line);
    if (c.from == c.to) throw Error(ErrorKind::SelfLoop, c.from, line);
    if (c.weight < 1) throw Error(ErrorKind::BadWeight, std::to_string(c.weight), line);
    for (const auto& e : connections_) {
      bool same_ordered = e.from == c.from && e.to == c.to;
      bool same_reversed = e.from == c.to && e.to == c.from;
      bool conflict;
      if (!e.directed || !c.directed) {
        // Undirected connections claim the unordered pair.
        conflict = same_ordered || same_reversed;
      } else {
        conflict = same_ordered;
      }
      if (conflict)
        throw Error(ErrorKind::DuplicateConnection, c.from + " " + c.to, line);
    }
    connections_.push_back(c);
    if (c.directed) ++directed_count_;
    if (c.weight != 1) ++nonunit_count_;
    adjacency_[fi->second].emplace_back(ti->second, c.weight);
    if (!c.directed) adjacency_[ti->second].emplace_back(fi->second, c.weight);
  }

  std::string name_;
  std::vector<std::string> points_;
  std::map<std::string, std::size_t> index_;
  std::vector<Connection> connections_;
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency_;
  int directed_count_ = 0;
  int nonunit_count_ = 0;
};

// A point sequence whose consecutive pairs are connected (direction
// respected); length is the summed weight of the traversed connections.
struct Walk {
  std::vector<std::string> points;
  int length = 0;

  bool operator==(const Walk& other) const { return points == other.points; }
  bool operator<(const Walk& other) const { return points < other.points; }

  std::string str(char sep = '-') const {
    std::string s;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) s += sep;
      s += points[i];
    }
    return s;
  }
};

// Validates the sequence against the world and computes the length.
inline Walk make_walk(const World& world, const std::vector<std::string>& points) {
  if (points.empty())
    throw Error(ErrorKind::InvalidWalk, "empty point sequence");
  Walk w;
  w.points = points;
  std::size_t prev = world.index_of(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::size_t cur = world.index_of(points[i]);
    auto step = world.step_weight(prev, cur);
    if (!step)
      throw Error(ErrorKind::InvalidWalk,
                  points[i - 1] + " -> " + points[i] + " is not a connection");
    w.length += *step;
    prev = cur;
  }
  return w;
}

namespace detail {

// Dijkstra from source over the (optionally reversed) adjacency.
inline std::vector<Distance> shortest_from(const World& world, std::size_t source,
                                           bool reversed = false) {
  const std::size_t n = world.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> rev;
  if (reversed) {
    rev.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [b, w] : world.neighbors(a)) rev[b].emplace_back(a, w);
  }
  auto out = [&](std::size_t i) -> const std::vector<std::pair<std::size_t, int>>& {
    return reversed ? rev[i] : world.neighbors(i);
  };
  std::vector<Distance> dist(n);
  using Item = std::pair<int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (!dist[u] || d > *dist[u]) continue;
    for (const auto& [v, w] : out(u)) {
      int nd = d + w;
      if (!dist[v] || nd < *dist[v]) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace detail

// Minimal walk length from u to v; 0 when u = v; unreachable when no walk.
inline Distance distance(const World& world, std::string_view u, std::string_view v) {
  std::size_t ui = world.index_of(u);
  std::size_t vi = world.index_of(v);
  return detail::shortest_from(world, ui)[vi];
}

// All minimal-weight walks from u to v, sorted by point sequence. Positive
// weights keep every geodesic simple, so the shortest-path DAG walk below
// terminates.
inline std::vector<Walk> geodesics(const World& world, std::string_view u,
                                   std::string_view v) {
  std::size_t ui = world.index_of(u);
  std::size_t vi = world.index_of(v);
  if (ui == vi) return {Walk{{std::string(u)}, 0}};
  auto from_u = detail::shortest_from(world, ui);
  if (!from_u[vi]) return {};
  auto to_v = detail::shortest_from(world, vi, /*reversed=*/true);
  const int total = *from_u[vi];

  std::vector<Walk> result;
  std::vector<std::size_t> stack{ui};
  int acc = 0;
  auto dfs = [&](auto&& self, std::size_t x) -> void {
    if (x == vi) {
      Walk w;
      for (std::size_t i : stack) w.points.push_back(world.label_of(i));
      w.length = total;
      result.push_back(std::move(w));
      return;
    }
    for (const auto& [y, w] : world.neighbors(x)) {
      if (!to_v[y]) continue;
      if (acc + w + *to_v[y] != total) continue;
      stack.push_back(y);
      acc += w;
      self(self, y);
      acc -= w;
      stack.pop_back();
    }
  };
  dfs(dfs, ui);
  std::sort(result.begin(), result.end());
  return result;
}

// True iff walk.length equals the distance between its endpoints.
inline bool is_geodesic(const World& world, const Walk& walk) {
  Walk checked = make_walk(world, walk.points);  // throws InvalidWalk if not a walk
  Distance d = distance(world, checked.points.front(), checked.points.back());
  return d && *d == checked.length;
}

// --- World file parsing -----------------------------------------------------
//
//   world <name>                  (optional, first non-comment line)
//   points <label> <label> ...    (exactly one such line)
//   edge <a> <b> [weight]         undirected, weight defaults to 1
//   arc <a> <b> [weight]          directed a->b, weight defaults to 1
//
// '#' begins a comment; blank lines ignored.

inline World parse_world(std::string_view text) {
  std::string name;
  std::vector<std::string> points;
  std::vector<Connection> connections;
  bool seen_points = false;
  bool seen_any = false;
  int points_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    if (kw == "world") {
      if (seen_any || tok.size() != 2)
        throw Error(ErrorKind::SyntaxError, "world line must come first with one name", lineno);
      name = tok[1];
    } else if (kw == "points") {
      if (seen_points)
        throw Error(ErrorKind::SyntaxError, "duplicate points line", lineno);
      if (tok.size() < 2)
        throw Error(ErrorKind::SyntaxError, "points line needs at least one label", lineno);
      points.assign(tok.begin() + 1, tok.end());
      seen_points = true;
      points_line = lineno;
      World validate(name, points, {}, points_line);
      (void)validate;
    } else if (kw == "edge" || kw == "arc") {
      if (!seen_points)
        throw Error(ErrorKind::SyntaxError, "points must be declared before connections", lineno);
      if (tok.size() != 3 && tok.size() != 4)
        throw Error(ErrorKind::SyntaxError, kw + " needs two labels and an optional weight", lineno);
      Connection c;
      c.from = tok[1];
      c.to = tok[2];
      c.directed = (kw == "arc");
      if (tok.size() == 4) {
        try {
          std::size_t pos = 0;
          c.weight = std::stoi(tok[3], &pos);
          if (pos != tok[3].size()) throw std::invalid_argument(tok[3]);
        } catch (const std::exception&) {
          throw Error(ErrorKind::BadWeight, tok[3], lineno);
        }
        if (c.weight < 1) throw Error(ErrorKind::BadWeight, tok[3], lineno);
      }
      // Re-validate per line so errors carry the right line number.
      {
        std::vector<Connection> next = connections;
        next.push_back(c);
        World check(name, points, next, lineno);
        (void)check;
      }
      connections.push_back(c);
    } else {
      throw Error(ErrorKind::SyntaxError, "unknown directive '" + kw + "'", lineno);
    }
    seen_any = true;
  }
  if (!seen_points)
    throw Error(ErrorKind::SyntaxError, "missing points line", lineno);
  return World(name, points, connections, points_line);
}

}  // namespace pointworld
