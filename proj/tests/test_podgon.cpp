#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "oracles.hpp"
#include "pointworld/podgon.hpp"

using namespace pointworld;

namespace {

// Definer A: an equilateral polygon with an odd number of sides.
ExprPtr definition_a() { return parse_definition("polygon and equilateral and odd(straight)"); }
// Definer B: a closed shape with an odd number of straight line sides.
ExprPtr definition_b() { return parse_definition("closed and odd(straight)"); }

ShapeDescription shape(const std::string& literal) { return parse_shape(literal); }

}  // namespace

TEST_CASE("parse_definition accepts the definer predicates") {
  CHECK(print_definition(definition_a()) == "polygon and equilateral and odd(straight)");
  CHECK(print_definition(definition_b()) == "closed and odd(straight)");
}

TEST_CASE("parse_definition rejects malformed input") {
  CHECK_THROWS_AS(parse_definition("closed and and"), Error);
  CHECK_THROWS_AS(parse_definition("odd(straight"), Error);
  CHECK_THROWS_AS(parse_definition("straight >"), Error);
  CHECK_THROWS_AS(parse_definition("closed extra"), Error);
  CHECK_THROWS_AS(parse_definition(""), Error);
  CHECK_THROWS_AS(parse_definition("straight @ 3"), Error);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_definition("closed and and");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 11") != std::string::npos);
  }
}

TEST_CASE("evaluation of the definer predicates") {
  // Shape with three straight sides and one curved side: B yes, A no.
  ShapeDescription curvy = shape("closed,straight=3,curved=1,vertices=4");
  CHECK(evaluate(definition_b(), curvy));
  CHECK_FALSE(evaluate(definition_a(), curvy));

  // Square: rejected by both.
  ShapeDescription square = shape("closed,straight=4,equal,vertices=4");
  CHECK_FALSE(evaluate(definition_a(), square));
  CHECK_FALSE(evaluate(definition_b(), square));

  // Equilateral triangle: a podgon for both.
  ShapeDescription triangle = shape("closed,straight=3,equal,vertices=3");
  CHECK(evaluate(definition_a(), triangle));
  CHECK(evaluate(definition_b(), triangle));
}

TEST_CASE("polygon and sides expand as derived features") {
  CHECK(evaluate(parse_definition("polygon"), shape("closed,straight=3,equal")));
  CHECK_FALSE(evaluate(parse_definition("polygon"), shape("closed,straight=2")));
  CHECK_FALSE(evaluate(parse_definition("polygon"), shape("closed,straight=3,curved=1")));
  CHECK_FALSE(evaluate(parse_definition("polygon"), shape("straight=3")));  // open
  CHECK(evaluate(parse_definition("sides = 4"), shape("closed,straight=3,curved=1")));
}

TEST_CASE("equal is false whenever straight is zero") {
  ShapeDescription circle = parse_shape("closed,curved=1,equal");
  CHECK_FALSE(circle.equal);
  CHECK_FALSE(evaluate(parse_definition("equilateral"), circle));
}

TEST_CASE("shape literal parsing") {
  ShapeDescription s = parse_shape("closed,straight=3,curved=1,vertices=4");
  CHECK(s.closed);
  CHECK(s.straight == 3);
  CHECK(s.curved == 1);
  CHECK(s.vertices == 4);
  CHECK_FALSE(s.equal);
  CHECK_THROWS_AS(parse_shape("closed,bogus=1"), Error);
  CHECK_THROWS_AS(parse_shape("wavy"), Error);
  // Round trip through the printer.
  CHECK(parse_shape(s.str()) == s);
  CHECK(parse_shape(ShapeDescription{}.str()) == ShapeDescription{});
}

TEST_CASE("consistency against labeled examples") {
  // The open greater-than shape is a member of neither definition, so an
  // expression admitting it is inconsistent with the table.
  std::vector<LabeledExample> table{
      {shape("straight=2,vertices=1"), false},
  };
  ConsistencyResult r = consistent(parse_definition("vertices >= 1"), table);
  CHECK_FALSE(r.ok);
  CHECK(r.expected == false);
  CHECK(r.got == true);

  CHECK(consistent(parse_definition("closed"), {}).ok);  // vacuous
}

TEST_CASE("definer table is consistent with both definitions") {
  // Appendix-style table encoded as features; labels computed from the two
  // definitions' plain readings and checked by hand.
  struct Row {
    const char* literal;
    bool a;
    bool b;
  };
  const Row rows[] = {
      {"closed,straight=3,equal,vertices=3", true, true},    // equilateral triangle
      {"closed,straight=4,equal,vertices=4", false, false},  // square
      {"closed,straight=5,equal,vertices=5", true, true},    // equilateral pentagon
      {"closed,straight=5,vertices=5", false, true},         // scalene pentagon
      {"closed,straight=3,curved=1,vertices=4", false, true},// triangle with a bulge
      {"closed,curved=1", false, false},                     // circle
      {"straight=2,vertices=1", false, false},               // open greater-than shape
      {"closed,straight=6,equal,vertices=6", false, false},  // equilateral hexagon
  };
  std::vector<LabeledExample> table_a, table_b;
  for (const auto& row : rows) {
    table_a.push_back({shape(row.literal), row.a});
    table_b.push_back({shape(row.literal), row.b});
  }
  CHECK(consistent(definition_a(), table_a).ok);
  CHECK(consistent(definition_b(), table_b).ok);
}

TEST_CASE("consistent returns the first counterexample in input order") {
  std::vector<LabeledExample> table{
      {shape("closed,straight=3,equal,vertices=3"), true},
      {shape("closed,straight=4,equal,vertices=4"), true},  // mislabeled
      {shape("closed,straight=5,equal,vertices=5"), false}, // also mislabeled
  };
  ConsistencyResult r = consistent(definition_a(), table);
  REQUIRE_FALSE(r.ok);
  CHECK(r.shape == shape("closed,straight=4,equal,vertices=4"));
}

TEST_CASE("discriminating shapes separate the definer predicates") {
  auto diff = discriminating_shapes(definition_a(), definition_b());
  CHECK_FALSE(diff.empty());
  bool saw_curvy = false;
  for (const auto& s : diff) {
    CHECK(evaluate(definition_a(), s) != evaluate(definition_b(), s));
    if (s == shape("closed,straight=3,curved=1")) saw_curvy = true;
  }
  CHECK(saw_curvy);
}

TEST_CASE("identical and complementary predicates") {
  ExprPtr e = definition_b();
  CHECK(discriminating_shapes(e, e).empty());

  std::size_t grid_size = 0;
  for_each_shape(FeatureBounds{}, [&](const ShapeDescription&) { ++grid_size; });
  auto all = discriminating_shapes(parse_definition("closed"), parse_definition("not closed"));
  CHECK(all.size() == grid_size);
}

TEST_CASE("entailment") {
  CHECK(entails(parse_definition("polygon and odd(straight)"),
                parse_definition("closed and odd(straight)"))
            .holds);
  auto reverse = entails(parse_definition("closed and odd(straight)"),
                         parse_definition("polygon and odd(straight)"));
  REQUIRE_FALSE(reverse.holds);
  REQUIRE(reverse.witness.has_value());
  CHECK(evaluate(parse_definition("closed and odd(straight)"), *reverse.witness));
  CHECK_FALSE(evaluate(parse_definition("polygon and odd(straight)"), *reverse.witness));

  CHECK(entails(definition_a(), definition_a()).holds);  // reflexivity
}

TEST_CASE("discriminating_shapes empty iff mutual entailment") {
  const char* exprs[] = {
      "closed", "polygon", "closed and curved = 0 and straight >= 3",
      "odd(sides)", "odd(straight) and curved = 0",
  };
  for (const char* a : exprs)
    for (const char* b : exprs) {
      ExprPtr ea = parse_definition(a), eb = parse_definition(b);
      bool no_diff = discriminating_shapes(ea, eb).empty();
      bool mutual = entails(ea, eb).holds && entails(eb, ea).holds;
      CHECK(no_diff == mutual);
    }
}

TEST_CASE("printer/parser round trip is stable") {
  const char* exprs[] = {
      "polygon and equilateral and odd(straight)",
      "closed and odd(straight)",
      "not (closed or even(curved)) and vertices >= 2",
      "straight != 3 or not equilateral",
      "(closed or polygon) and (sides <= 5 or vertices > 1)",
      "not not closed",
  };
  for (const char* text : exprs) {
    std::string once = print_definition(parse_definition(text));
    std::string twice = print_definition(parse_definition(once));
    CHECK(once == twice);
  }
}

namespace {

// Random well-formed expression of bounded depth, for the evaluator
// cross-check.
ExprPtr random_expr(std::mt19937& rng, int depth) {
  auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto make = [](DefinitionExpr e) {
    return std::make_shared<const DefinitionExpr>(std::move(e));
  };
  DefinitionExpr e;
  if (depth == 0 || pick(3) == 0) {
    switch (pick(5)) {
      case 0: e.kind = DefinitionExpr::Kind::Closed; break;
      case 1: e.kind = DefinitionExpr::Kind::Polygon; break;
      case 2: e.kind = DefinitionExpr::Kind::Equilateral; break;
      case 3:
        e.kind = pick(2) ? DefinitionExpr::Kind::Odd : DefinitionExpr::Kind::Even;
        e.counter = static_cast<Counter>(pick(4));
        break;
      default:
        e.kind = DefinitionExpr::Kind::Cmp;
        e.counter = static_cast<Counter>(pick(4));
        e.op = static_cast<CmpOp>(pick(6));
        e.value = pick(7);
        break;
    }
    return make(std::move(e));
  }
  switch (pick(3)) {
    case 0:
      e.kind = DefinitionExpr::Kind::Not;
      e.children = {random_expr(rng, depth - 1)};
      break;
    default:
      e.kind = pick(2) ? DefinitionExpr::Kind::Or : DefinitionExpr::Kind::And;
      e.children = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
      if (pick(2)) e.children.push_back(random_expr(rng, depth - 1));
      break;
  }
  return make(std::move(e));
}

}  // namespace

TEST_CASE("evaluate agrees with the independent stack-machine evaluator") {
  std::mt19937 rng(20240817);
  FeatureBounds small{3, 2, 3};
  for (int i = 0; i < 200; ++i) {
    ExprPtr e = random_expr(rng, 4);
    // Round trip through the grammar as well.
    ExprPtr reparsed = parse_definition(print_definition(e));
    for_each_shape(small, [&](const ShapeDescription& s) {
      bool direct = evaluate(e, s);
      CHECK(direct == oracle::evaluate_postfix(e, s));
      CHECK(direct == evaluate(reparsed, s));
    });
  }
}
