#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pointworld/error.hpp"

namespace pointworld {

enum class StatementKind { Axiom, Definition, Given, Claim };

inline const char* to_string(StatementKind k) {
  switch (k) {
    case StatementKind::Axiom: return "Axiom";
    case StatementKind::Definition: return "Definition";
    case StatementKind::Given: return "Given";
    case StatementKind::Claim: return "Claim";
  }
  return "?";
}

struct Statement {
  std::string id;
  std::string text;
  StatementKind kind = StatementKind::Claim;
  std::vector<std::string> uses;  // definitional premises; Definitions only
};

struct Justification {
  std::string target;                 // a Claim id
  std::vector<std::string> premises;  // nonempty
};

// Typed statements plus justification hyperedges; the assumption-digging
// diagram. The dependency relation below runs from a statement to the
// premises it rests on (justification premises for Claims, `uses` for
// Definitions).
class TheoryGraph {
 public:
  TheoryGraph(std::vector<Statement> statements, std::vector<Justification> justifications)
      : statements_(std::move(statements)), justifications_(std::move(justifications)) {
    for (const auto& s : statements_) {
      if (!by_id_.emplace(s.id, &s).second)
        throw Error(ErrorKind::DuplicateId, s.id);
    }
    for (const auto& s : statements_)
      for (const auto& u : s.uses) require(u);
    for (const auto& j : justifications_) {
      const Statement& target = require(j.target);
      if (target.kind != StatementKind::Claim)
        throw Error(ErrorKind::JustifiedNonClaim, j.target);
      if (j.premises.empty())
        throw Error(ErrorKind::SyntaxError, "justification of " + j.target + " has no premises");
      for (const auto& p : j.premises) require(p);
    }
  }

  const std::vector<Statement>& statements() const { return statements_; }
  const std::vector<Justification>& justifications() const { return justifications_; }

  bool has(const std::string& id) const { return by_id_.count(id) != 0; }

  const Statement& require(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw Error(ErrorKind::UnknownId, id);
    return *it->second;
  }

  // Sorted dependency targets of one statement: the union of all its
  // justifications' premises, plus `uses` for Definitions.
  std::vector<std::string> dependencies(const std::string& id) const {
    std::set<std::string> deps(require(id).uses.begin(), require(id).uses.end());
    for (const auto& j : justifications_)
      if (j.target == id) deps.insert(j.premises.begin(), j.premises.end());
    return {deps.begin(), deps.end()};
  }

 private:
  std::vector<Statement> statements_;
  std::vector<Justification> justifications_;
  std::map<std::string, const Statement*> by_id_;
};

// Claims with no justification at all.
inline std::vector<std::string> unjustified_claims(const TheoryGraph& graph) {
  std::vector<std::string> out;
  for (const auto& s : graph.statements()) {
    if (s.kind != StatementKind::Claim) continue;
    bool justified = false;
    for (const auto& j : graph.justifications())
      if (j.target == s.id) {
        justified = true;
        break;
      }
    if (!justified) out.push_back(s.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All elementary cycles of the dependency relation. Each cycle is reported
// once, rotated to start at its smallest id; the list is sorted.
inline std::vector<std::vector<std::string>> detect_cycles(const TheoryGraph& graph) {
  std::vector<std::string> ids;
  for (const auto& s : graph.statements()) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  std::map<std::string, std::size_t> ord;
  for (std::size_t i = 0; i < ids.size(); ++i) ord[ids[i]] = i;

  std::vector<std::vector<std::string>> cycles;
  std::vector<std::string> path;
  std::set<std::string> on_path;
  // Rooting each cycle at its minimal node: search only nodes >= the root.
  auto dfs = [&](auto&& self, const std::string& root, const std::string& node) -> void {
    path.push_back(node);
    on_path.insert(node);
    for (const auto& next : graph.dependencies(node)) {
      if (next == root) {
        cycles.push_back(path);
      } else if (ord[next] > ord[root] && !on_path.count(next)) {
        self(self, root, next);
      }
    }
    on_path.erase(node);
    path.pop_back();
  };
  for (const auto& root : ids) dfs(dfs, root, root);
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace detail {

// Ids reachable from start (inclusive) through the dependency relation.
inline std::set<std::string> reachable(const TheoryGraph& graph, const std::string& start) {
  std::set<std::string> seen{start};
  std::vector<std::string> todo{start};
  while (!todo.empty()) {
    std::string node = todo.back();
    todo.pop_back();
    for (const auto& next : graph.dependencies(node))
      if (seen.insert(next).second) todo.push_back(next);
  }
  return seen;
}

inline void require_acyclic_from(const TheoryGraph& graph, const std::string& claim) {
  auto r = reachable(graph, claim);
  for (const auto& cycle : detect_cycles(graph)) {
    if (r.count(cycle.front())) {
      std::string msg;
      for (const auto& id : cycle) msg += id + " -> ";
      msg += cycle.front();
      throw Error(ErrorKind::CyclicDependency, msg);
    }
  }
}

}  // namespace detail

// All Axiom/Definition/Given statements the claim ultimately rests on, with
// alternative justifications merged by union.
inline std::set<std::string> foundation(const TheoryGraph& graph, const std::string& claim) {
  graph.require(claim);
  detail::require_acyclic_from(graph, claim);
  std::set<std::string> out;
  for (const auto& id : detail::reachable(graph, claim))
    if (graph.require(id).kind != StatementKind::Claim) out.insert(id);
  return out;
}

// Indented digging tree below the claim; premises sorted by id, shared
// premises rendered once per branch.
inline std::string render_tree(const TheoryGraph& graph, const std::string& claim) {
  graph.require(claim);
  detail::require_acyclic_from(graph, claim);
  std::ostringstream out;
  auto walk = [&](auto&& self, const std::string& id, int depth) -> void {
    const Statement& s = graph.require(id);
    for (int i = 0; i < depth; ++i) out << "  ";
    out << s.id << " [" << to_string(s.kind) << "]";
    if (!s.text.empty()) out << ' ' << s.text;
    out << "\n";
    for (const auto& dep : graph.dependencies(id)) self(self, dep, depth + 1);
  };
  walk(walk, claim, 0);
  return out.str();
}

// --- Theory file parsing ------------------------------------------------------
//
//   axiom <id>: <text>
//   def <id>: <text> [uses <id>,<id>,...]
//   given <id>: <text>
//   claim <id>: <text>
//   justify <claim-id> <- <id>,<id>,...
//
// '#' begins a comment; blank lines ignored.

namespace detail {

inline bool valid_statement_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

inline std::string strip(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

inline std::vector<std::string> split_id_list(const std::string& s, int lineno) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = strip(part);
    if (!valid_statement_id(part))
      throw Error(ErrorKind::SyntaxError, "bad id '" + part + "' in id list", lineno);
    out.push_back(part);
  }
  if (out.empty())
    throw Error(ErrorKind::SyntaxError, "empty id list", lineno);
  return out;
}

}  // namespace detail

inline TheoryGraph parse_theory(std::string_view text) {
  std::vector<Statement> statements;
  std::vector<Justification> justifications;
  std::set<std::string> seen_ids;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = detail::strip(raw);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "axiom" || kw == "def" || kw == "given" || kw == "claim") {
      std::string rest = detail::strip(line.substr(kw.size()));
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw Error(ErrorKind::SyntaxError, "expected '<id>: <text>'", lineno);
      Statement s;
      s.id = detail::strip(rest.substr(0, colon));
      s.text = detail::strip(rest.substr(colon + 1));
      if (!detail::valid_statement_id(s.id))
        throw Error(ErrorKind::SyntaxError, "bad statement id '" + s.id + "'", lineno);
      if (!seen_ids.insert(s.id).second)
        throw Error(ErrorKind::DuplicateId, s.id, lineno);
      if (kw == "axiom") s.kind = StatementKind::Axiom;
      else if (kw == "def") s.kind = StatementKind::Definition;
      else if (kw == "given") s.kind = StatementKind::Given;
      else s.kind = StatementKind::Claim;
      if (kw == "def") {
        // Optional trailing "uses <id>,<id>,..." on the text.
        auto pos = s.text.rfind("uses ");
        if (pos != std::string::npos &&
            (pos == 0 || std::isspace(static_cast<unsigned char>(s.text[pos - 1])))) {
          s.uses = detail::split_id_list(s.text.substr(pos + 5), lineno);
          s.text = detail::strip(s.text.substr(0, pos));
        }
      }
      statements.push_back(std::move(s));
    } else if (kw == "justify") {
      auto arrow = line.find("<-");
      if (arrow == std::string::npos)
        throw Error(ErrorKind::SyntaxError, "justify needs '<claim-id> <- <premises>'", lineno);
      Justification j;
      j.target = detail::strip(line.substr(kw.size(), arrow - kw.size()));
      if (!detail::valid_statement_id(j.target))
        throw Error(ErrorKind::SyntaxError, "bad claim id '" + j.target + "'", lineno);
      j.premises = detail::split_id_list(line.substr(arrow + 2), lineno);
      justifications.push_back(std::move(j));
    } else {
      throw Error(ErrorKind::SyntaxError, "unknown directive '" + kw + "'", lineno);
    }
  }
  return TheoryGraph(std::move(statements), std::move(justifications));
}

}  // namespace pointworld
