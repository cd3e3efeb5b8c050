#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pointworld/error.hpp"

namespace pointworld {

// Bounded feature record for a podgon shape. The convention `equal = false
// whenever straight = 0` keeps "equilateral" from holding vacuously on
// all-curved shapes.
struct ShapeDescription {
  bool closed = false;
  int straight = 0;  // straight-line sides
  int curved = 0;    // curved sides
  bool equal = false;  // all straight sides equal in length
  int vertices = 0;

  ShapeDescription& normalize() {
    if (straight == 0) equal = false;
    return *this;
  }

  bool operator==(const ShapeDescription& o) const {
    return closed == o.closed && straight == o.straight && curved == o.curved &&
           equal == o.equal && vertices == o.vertices;
  }

  std::string str() const {
    std::string s;
    auto add = [&s](const std::string& part) {
      if (!s.empty()) s += ',';
      s += part;
    };
    if (closed) add("closed");
    if (straight) add("straight=" + std::to_string(straight));
    if (curved) add("curved=" + std::to_string(curved));
    if (equal) add("equal");
    if (vertices) add("vertices=" + std::to_string(vertices));
    if (s.empty()) s = "open";  // all-default shape; "open" is accepted as a no-op key
    return s;
  }
};

struct LabeledExample {
  ShapeDescription shape;
  bool is_member = false;
};

enum class Counter { Straight, Curved, Sides, Vertices };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

inline int counter_value(const ShapeDescription& s, Counter c) {
  switch (c) {
    case Counter::Straight: return s.straight;
    case Counter::Curved: return s.curved;
    case Counter::Sides: return s.straight + s.curved;
    case Counter::Vertices: return s.vertices;
  }
  return 0;
}

inline const char* to_string(Counter c) {
  switch (c) {
    case Counter::Straight: return "straight";
    case Counter::Curved: return "curved";
    case Counter::Sides: return "sides";
    case Counter::Vertices: return "vertices";
  }
  return "?";
}

inline const char* to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

// Parsed boolean predicate over shape features.
struct DefinitionExpr {
  enum class Kind { Or, And, Not, Closed, Polygon, Equilateral, Odd, Even, Cmp };
  using Ptr = std::shared_ptr<const DefinitionExpr>;

  Kind kind = Kind::Closed;
  std::vector<Ptr> children;  // Or/And (>= 2), Not (1)
  Counter counter = Counter::Straight;
  CmpOp op = CmpOp::Eq;
  int value = 0;
};

using ExprPtr = DefinitionExpr::Ptr;

inline bool evaluate(const DefinitionExpr& e, const ShapeDescription& s) {
  using Kind = DefinitionExpr::Kind;
  switch (e.kind) {
    case Kind::Or:
      for (const auto& c : e.children)
        if (evaluate(*c, s)) return true;
      return false;
    case Kind::And:
      for (const auto& c : e.children)
        if (!evaluate(*c, s)) return false;
      return true;
    case Kind::Not:
      return !evaluate(*e.children[0], s);
    case Kind::Closed:
      return s.closed;
    case Kind::Polygon:
      return s.closed && s.curved == 0 && s.straight >= 3;
    case Kind::Equilateral:
      return s.equal;
    case Kind::Odd:
      return counter_value(s, e.counter) % 2 == 1;
    case Kind::Even:
      return counter_value(s, e.counter) % 2 == 0;
    case Kind::Cmp: {
      int v = counter_value(s, e.counter);
      switch (e.op) {
        case CmpOp::Eq: return v == e.value;
        case CmpOp::Ne: return v != e.value;
        case CmpOp::Lt: return v < e.value;
        case CmpOp::Le: return v <= e.value;
        case CmpOp::Gt: return v > e.value;
        case CmpOp::Ge: return v >= e.value;
      }
      return false;
    }
  }
  return false;
}

inline bool evaluate(const ExprPtr& e, const ShapeDescription& s) { return evaluate(*e, s); }

// Canonical printer; parse(print(parse(x))) equals parse(x).
inline std::string print_definition(const DefinitionExpr& e) {
  using Kind = DefinitionExpr::Kind;
  auto wrap = [](const DefinitionExpr& child, bool need) {
    std::string s = print_definition(child);
    return need ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case Kind::Or: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " or ";
        s += print_definition(*e.children[i]);
      }
      return s;
    }
    case Kind::And: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " and ";
        s += wrap(*e.children[i], e.children[i]->kind == Kind::Or);
      }
      return s;
    }
    case Kind::Not:
      return "not " + wrap(*e.children[0], e.children[0]->kind == Kind::Or ||
                                               e.children[0]->kind == Kind::And);
    case Kind::Closed: return "closed";
    case Kind::Polygon: return "polygon";
    case Kind::Equilateral: return "equilateral";
    case Kind::Odd: return std::string("odd(") + to_string(e.counter) + ")";
    case Kind::Even: return std::string("even(") + to_string(e.counter) + ")";
    case Kind::Cmp:
      return std::string(to_string(e.counter)) + " " + to_string(e.op) + " " +
             std::to_string(e.value);
  }
  return "?";
}

inline std::string print_definition(const ExprPtr& e) { return print_definition(*e); }

// --- Definition grammar -------------------------------------------------------
//
//   expr := term { "or" term }
//   term := factor { "and" factor }
//   factor := "not" factor | "(" expr ")" | atom
//   atom := "closed" | "polygon" | "equilateral"
//         | "odd(" counter ")" | "even(" counter ")" | counter cmp nat
//   counter := "straight" | "curved" | "sides" | "vertices"
//   cmp := "=" | "!=" | "<" | "<=" | ">" | ">="

namespace detail {

struct Token {
  std::string text;
  std::size_t pos = 0;  // character offset in the input
};

inline std::vector<Token> lex_definition(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({std::string(text.substr(start, i - start)), start});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({std::string(text.substr(start, i - start)), start});
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), i});
      ++i;
    } else if (c == '<' || c == '>' || c == '!' || c == '=') {
      std::size_t start = i;
      ++i;
      if ((c == '<' || c == '>' || c == '!') && i < text.size() && text[i] == '=') ++i;
      out.push_back({std::string(text.substr(start, i - start)), start});
    } else {
      throw Error(ErrorKind::SyntaxError,
                  "unexpected character '" + std::string(1, c) + "' at position " +
                      std::to_string(i));
    }
  }
  return out;
}

class DefinitionParser {
 public:
  explicit DefinitionParser(std::string_view text) : tokens_(lex_definition(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (pos_ < tokens_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::size_t at = pos_ < tokens_.size() ? tokens_[pos_].pos : std::string::npos;
    std::string where = at == std::string::npos ? "end of input" : "position " + std::to_string(at);
    throw Error(ErrorKind::SyntaxError, what + " at " + where);
  }

  bool peek_is(const std::string& s) const {
    return pos_ < tokens_.size() && tokens_[pos_].text == s;
  }

  bool accept(const std::string& s) {
    if (!peek_is(s)) return false;
    ++pos_;
    return true;
  }

  void expect(const std::string& s) {
    if (!accept(s)) fail("expected '" + s + "'");
  }

  static ExprPtr make(DefinitionExpr e) {
    return std::make_shared<const DefinitionExpr>(std::move(e));
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (accept("or")) terms.push_back(term());
    if (terms.size() == 1) return terms[0];
    DefinitionExpr e;
    e.kind = DefinitionExpr::Kind::Or;
    e.children = std::move(terms);
    return make(std::move(e));
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors{factor()};
    while (accept("and")) factors.push_back(factor());
    if (factors.size() == 1) return factors[0];
    DefinitionExpr e;
    e.kind = DefinitionExpr::Kind::And;
    e.children = std::move(factors);
    return make(std::move(e));
  }

  ExprPtr factor() {
    if (accept("not")) {
      DefinitionExpr e;
      e.kind = DefinitionExpr::Kind::Not;
      e.children = {factor()};
      return make(std::move(e));
    }
    if (accept("(")) {
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    return atom();
  }

  std::optional<Counter> counter_named(const std::string& s) const {
    if (s == "straight") return Counter::Straight;
    if (s == "curved") return Counter::Curved;
    if (s == "sides") return Counter::Sides;
    if (s == "vertices") return Counter::Vertices;
    return std::nullopt;
  }

  ExprPtr atom() {
    if (pos_ >= tokens_.size()) fail("expected an atom");
    std::string t = tokens_[pos_].text;
    DefinitionExpr e;
    if (t == "closed" || t == "polygon" || t == "equilateral") {
      ++pos_;
      e.kind = t == "closed"    ? DefinitionExpr::Kind::Closed
               : t == "polygon" ? DefinitionExpr::Kind::Polygon
                                : DefinitionExpr::Kind::Equilateral;
      return make(std::move(e));
    }
    if (t == "odd" || t == "even") {
      ++pos_;
      e.kind = t == "odd" ? DefinitionExpr::Kind::Odd : DefinitionExpr::Kind::Even;
      expect("(");
      if (pos_ >= tokens_.size()) fail("expected a counter");
      auto ctr = counter_named(tokens_[pos_].text);
      if (!ctr) fail("expected a counter");
      e.counter = *ctr;
      ++pos_;
      expect(")");
      return make(std::move(e));
    }
    if (auto ctr = counter_named(t)) {
      ++pos_;
      e.kind = DefinitionExpr::Kind::Cmp;
      e.counter = *ctr;
      if (pos_ >= tokens_.size()) fail("expected a comparison operator");
      std::string op = tokens_[pos_].text;
      if (op == "=") e.op = CmpOp::Eq;
      else if (op == "!=") e.op = CmpOp::Ne;
      else if (op == "<") e.op = CmpOp::Lt;
      else if (op == "<=") e.op = CmpOp::Le;
      else if (op == ">") e.op = CmpOp::Gt;
      else if (op == ">=") e.op = CmpOp::Ge;
      else fail("expected a comparison operator");
      ++pos_;
      if (pos_ >= tokens_.size() ||
          !std::isdigit(static_cast<unsigned char>(tokens_[pos_].text[0])))
        fail("expected a natural number");
      e.value = std::stoi(tokens_[pos_].text);
      ++pos_;
      return make(std::move(e));
    }
    fail("unexpected token '" + t + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_definition(std::string_view text) {
  return detail::DefinitionParser(text).parse();
}

// --- Shape literals and example tables -----------------------------------------
//
// Shape literal: comma list, e.g. `closed,straight=3,curved=1,vertices=4`
// (omitted booleans false, omitted counters 0). Example-table file: one line
// per example, `<shape-literal> -> member|nonmember`.

namespace detail {

inline std::string strip_ws(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

inline int parse_nat(const std::string& s, int lineno) {
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty counter value", lineno);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::SyntaxError, "bad counter value '" + s + "'", lineno);
  return std::stoi(s);
}

}  // namespace detail

inline ShapeDescription parse_shape(std::string_view text, int lineno = 0) {
  ShapeDescription s;
  std::istringstream in{std::string(text)};
  std::string part;
  while (std::getline(in, part, ',')) {
    part = detail::strip_ws(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      if (part == "closed") s.closed = true;
      else if (part == "equal") s.equal = true;
      else if (part == "open") {}  // explicit no-op for the all-default shape
      else throw Error(ErrorKind::SyntaxError, "unknown shape flag '" + part + "'", lineno);
    } else {
      std::string key = detail::strip_ws(part.substr(0, eq));
      int value = detail::parse_nat(detail::strip_ws(part.substr(eq + 1)), lineno);
      if (key == "straight") s.straight = value;
      else if (key == "curved") s.curved = value;
      else if (key == "vertices") s.vertices = value;
      else throw Error(ErrorKind::SyntaxError, "unknown shape counter '" + key + "'", lineno);
    }
  }
  return s.normalize();
}

// One example per line: `<shape-literal> -> member|nonmember`.
inline std::vector<LabeledExample> parse_example_table(std::string_view text) {
  std::vector<LabeledExample> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = detail::strip_ws(raw);
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "expected '<shape> -> member|nonmember'", lineno);
    LabeledExample ex;
    ex.shape = parse_shape(detail::strip_ws(line.substr(0, arrow)), lineno);
    std::string verdict = detail::strip_ws(line.substr(arrow + 2));
    if (verdict == "member") ex.is_member = true;
    else if (verdict == "nonmember") ex.is_member = false;
    else throw Error(ErrorKind::SyntaxError, "bad verdict '" + verdict + "'", lineno);
    out.push_back(ex);
  }
  return out;
}

struct ConsistencyResult {
  bool ok = true;
  ShapeDescription shape;
  bool expected = false;
  bool got = false;
};

// Ok iff evaluate agrees with every label; otherwise the first disagreement
// in input order.
inline ConsistencyResult consistent(const ExprPtr& expr,
                                    const std::vector<LabeledExample>& examples) {
  for (const auto& ex : examples) {
    bool got = evaluate(expr, ex.shape);
    if (got != ex.is_member) return {false, ex.shape, ex.is_member, got};
  }
  return {};
}

// Default search bounds: large enough to contain every shape the game uses.
struct FeatureBounds {
  int straight = 6;
  int curved = 3;
  int vertices = 8;
};

// The bounded feature grid in canonical order: closed, straight, curved,
// equal, vertices (equal = true skipped when straight = 0).
template <typename Fn>
inline void for_each_shape(const FeatureBounds& bounds, Fn&& fn) {
  for (int closed = 0; closed <= 1; ++closed)
    for (int straight = 0; straight <= bounds.straight; ++straight)
      for (int curved = 0; curved <= bounds.curved; ++curved)
        for (int equal = 0; equal <= (straight > 0 ? 1 : 0); ++equal)
          for (int vertices = 0; vertices <= bounds.vertices; ++vertices)
            fn(ShapeDescription{closed != 0, straight, curved, equal != 0, vertices});
}

// All shapes in the bounded grid where the two definitions disagree.
inline std::vector<ShapeDescription> discriminating_shapes(const ExprPtr& e1, const ExprPtr& e2,
                                                           const FeatureBounds& bounds = {}) {
  std::vector<ShapeDescription> out;
  for_each_shape(bounds, [&](const ShapeDescription& s) {
    if (evaluate(e1, s) != evaluate(e2, s)) out.push_back(s);
  });
  return out;
}

struct EntailmentResult {
  bool holds = true;
  std::optional<ShapeDescription> witness;  // satisfies e1 but not e2
};

// True iff no shape in the bounded grid satisfies e1 but not e2.
inline EntailmentResult entails(const ExprPtr& e1, const ExprPtr& e2,
                                const FeatureBounds& bounds = {}) {
  EntailmentResult result;
  for_each_shape(bounds, [&](const ShapeDescription& s) {
    if (!result.holds) return;
    if (evaluate(e1, s) && !evaluate(e2, s)) result = {false, s};
  });
  return result;
}

}  // namespace pointworld
