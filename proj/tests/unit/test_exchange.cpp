#include <doctest.h>

#include <sstream>

#include "regevo/exchange.hpp"
#include "support.hpp"

using namespace regevo;

TEST_CASE("serialize follows the exchange grammar") {
  const RegexRule r =
      make_rule(make_ad(make_or({"fever", "cough"}), make_or({"pneumonia"}), 0, 10), {"cold"});
  CHECK(serialize_rule(r) == "(fever|cough).{0,10}(pneumonia)##(cold)");
  CHECK(serialize_rule(make_rule(make_ad(make_or({"flu"}), make_or({"flu"}), 0, 8))) ==
        "(flu).{0,8}(flu)##");
  const AdExpression neg = make_ad(make_or({"x"}), make_or({"y", "z"}), 0, 3);
  CHECK(serialize_rule(make_rule(make_ad(make_or({"a"}), make_or({"b"}), 1, 2), {"n1", neg})) ==
        "(a).{1,2}(b)##(n1|(x).{0,3}(y|z))");
}

TEST_CASE("parse inverts serialize") {
  const RegexRule expected =
      make_rule(make_ad(make_or({"fever", "cough"}), make_or({"pneumonia"}), 0, 10), {"cold"});
  CHECK(parse_rule("(fever|cough).{0,10}(pneumonia)##(cold)") == expected);
  CHECK(parse_rule("  (fever|cough).{0,10}(pneumonia)##(cold)\t") == expected);
}

TEST_CASE("#.# separator is accepted on input only") {
  const RegexRule r = parse_rule("(a).{0,2}(b)#.#(c)");
  CHECK(r == make_rule(make_ad(make_or({"a"}), make_or({"b"}), 0, 2), {"c"}));
  CHECK(serialize_rule(r) == "(a).{0,2}(b)##(c)");
}

TEST_CASE("syntax errors report position and expectation") {
  SUBCASE("unclosed group") {
    try {
      parse_rule("(fever.{0,10}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 7);
      CHECK(e.expected() == std::vector<std::string>{"'|'", "')'"});
      CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
  }
  SUBCASE("missing separator") {
    try {
      parse_rule("(a).{0,1}(b)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 12);
      CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
  }
  SUBCASE("position counts leading whitespace") {
    try {
      parse_rule("  (a).{x,1}(b)##");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 7);
    }
  }
  CHECK_THROWS_AS(parse_rule(""), ParseError);
  CHECK_THROWS_AS(parse_rule("(a).{0,1}(b)##(c"), ParseError);
  CHECK_THROWS_AS(parse_rule("(a).{0,1}(b)##(c) extra"), ParseError);
  CHECK_THROWS_AS(parse_rule("(a).{0,99999999999}(b)##"), ParseError);
  CHECK_THROWS_AS(parse_rule("(a|).{0,1}(b)##"), ParseError);
}

TEST_CASE("constraint violations after a clean parse") {
  CHECK_THROWS_AS(parse_rule("(a).{5,2}(b)##"), ConstraintError);
  CHECK_THROWS_AS(parse_rule("(a|a).{0,2}(b)##"), ConstraintError);
}

TEST_CASE("random rules round-trip") {
  Rng rng(21);
  const auto pool = regevo::testing::word_pool(8);
  for (int i = 0; i < 2000; ++i) {
    const RegexRule r = regevo::testing::random_rule(rng, pool);
    REQUIRE(parse_rule(serialize_rule(r)) == r);
  }
}

TEST_CASE("rule files") {
  const std::vector<RegexVector> vectors{
      {"flu", {parse_rule("(flu).{0,8}(flu)##(the)"), parse_rule("(fever).{0,3}(cough)##")}},
      {"bitten by mammals", {parse_rule("(bitten).{0,9}(dog|cat)##")}}};
  std::ostringstream out;
  write_rules(out, vectors, {"evolved"});
  CHECK(out.str() ==
        "# evolved\n"
        "category: flu\n"
        "(flu).{0,8}(flu)##(the)\n"
        "(fever).{0,3}(cough)##\n"
        "category: bitten by mammals\n"
        "(bitten).{0,9}(dog|cat)##\n");
  std::istringstream in(out.str());
  CHECK(read_rules(in) == vectors);

  SUBCASE("repeated headers merge") {
    std::istringstream merged("category: a\n(x).{0,1}(y)##\n\ncategory: b\n(p).{0,1}(q)##\n"
                              "category: a\n(z).{0,1}(y)##\n");
    const auto got = read_rules(merged);
    REQUIRE(got.size() == 2);
    CHECK(got[0].rules.size() == 2);
  }
  SUBCASE("malformed line names its line") {
    std::istringstream bad("# c\ncategory: a\n(x).{0,1}(y)##\n(x).{0,1}(y\n");
    try {
      read_rules(bad, "edited.rules");
      FAIL("expected RuleFileError");
    } catch (const RuleFileError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).rfind("edited.rules:4:", 0) == 0);
    }
  }
  SUBCASE("rule before header") {
    std::istringstream bad("(x).{0,1}(y)##\n");
    CHECK_THROWS_AS(read_rules(bad), RuleFileError);
  }
  SUBCASE("header without rules") {
    std::istringstream bad("category: a\n");
    CHECK_THROWS_AS(read_rules(bad), RuleFileError);
  }
}
