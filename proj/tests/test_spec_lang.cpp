#include <catch2/catch_amalgamated.hpp>

#include "ordmean/invariants.hpp"
#include "ordmean/spec_lang.hpp"
#include "ordmean/verifier.hpp"

using namespace ordmean;

TEST_CASE("atoms parse") {
  GroupExpr c5 = parse_spec("C5");
  CHECK(c5.kind == GroupExpr::Kind::Cyclic);
  CHECK(c5.a == 5);
  CHECK(parse_spec("D14").kind == GroupExpr::Kind::Dihedral);
  CHECK(parse_spec("S4").a == 4);
  CHECK(parse_spec("A5").kind == GroupExpr::Kind::Alternating);
  CHECK(parse_spec("Q8").kind == GroupExpr::Kind::Quaternion8);
  GroupExpr f = parse_spec("F(7,3)");
  CHECK(f.kind == GroupExpr::Kind::Metacyclic);
  CHECK(f.a == 7);
  CHECK(f.b == 3);
  CHECK(f.c == 0);
  CHECK(parse_spec("F(7,3,2)").c == 2);
}

TEST_CASE("products parse") {
  GroupExpr e = parse_spec("C5xQ8");
  REQUIRE(e.kind == GroupExpr::Kind::Product);
  REQUIRE(e.factors.size() == 2);
  CHECK(e.factors[0].kind == GroupExpr::Kind::Cyclic);
  CHECK(e.factors[1].kind == GroupExpr::Kind::Quaternion8);
  CHECK(parse_spec("C2xC3xC5").factors.size() == 3);
}

TEST_CASE("whitespace and case are ignored") {
  CHECK(parse_spec(" c5 X q8 ") == parse_spec("C5xQ8"));
  CHECK(parse_spec("f( 7 , 3 )") == parse_spec("F(7,3)"));
  CHECK(parse_spec("d18") == parse_spec("D18"));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_spec("D7"), ParseError);    // odd dihedral order
  CHECK_THROWS_AS(parse_spec("D2"), ParseError);    // too small
  CHECK_THROWS_AS(parse_spec("C0"), ParseError);
  CHECK_THROWS_AS(parse_spec("Q9"), ParseError);
  CHECK_THROWS_AS(parse_spec("B5"), ParseError);    // unknown atom
  CHECK_THROWS_AS(parse_spec("C5x"), ParseError);   // dangling product
  CHECK_THROWS_AS(parse_spec("C5 Q8"), ParseError); // missing separator
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("F(8,3)"), ParseError);   // p not an odd prime
  CHECK_THROWS_AS(parse_spec("F(7,4)"), ParseError);   // q does not divide p-1
  CHECK_THROWS_AS(parse_spec("F(7,3,3)"), ParseError); // r has order 6, not 3
  try {
    parse_spec("C5xD7");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);  // the dihedral atom starts at byte 3
  }
}

TEST_CASE("printing round-trips") {
  for (const char* s : {"C5xQ8", "F(7,3)", "F(7,3,2)", "D18", "S3xC3", "C2xC3xC5", "Q8"}) {
    GroupExpr e = parse_spec(s);
    CHECK(to_spec_string(e) == s);
    CHECK(parse_spec(to_spec_string(e)) == e);
  }
  // and over every default corpus spec
  Corpus corpus = build_corpus(120);
  for (const auto& entry : corpus.entries) {
    GroupExpr reparsed = parse_spec(to_spec_string(entry.expr));
    REQUIRE(reparsed == entry.expr);
  }
}

TEST_CASE("expression orders") {
  CHECK(expr_order(parse_spec("S5")) == 120);
  CHECK(expr_order(parse_spec("A5")) == 60);
  CHECK(expr_order(parse_spec("F(7,3)")) == 21);
  CHECK(expr_order(parse_spec("C5xQ8")) == 40);
  CHECK(expr_order(parse_spec("C1")) == 1);
}

TEST_CASE("building groups from specs") {
  CHECK(build_group(parse_spec("C5xQ8")).order() == 40);
  CHECK(build_group(parse_spec("S3xC3")).order() == 18);
  // D4 is the Klein group in the order convention
  PermGroup d4 = build_group(parse_spec("D4"));
  CHECK(d4.order() == 4);
  CHECK(d4.order_statistics().max_order() == 2);
  // built orders agree with expr_order across a corpus
  Corpus corpus = build_corpus(60);
  for (const auto& entry : corpus.entries)
    REQUIRE(build_group(entry.expr).order() == expr_order(entry.expr));
}
