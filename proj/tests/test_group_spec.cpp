#include <doctest.h>

#include <stdexcept>

#include "mcs/group_spec.hpp"

using mcs::GroupSpecAst;
using mcs::SpecError;

TEST_CASE("leaf specs") {
  auto g = mcs::group_from_spec("C9");
  CHECK(g.order() == 9);
  CHECK(g.op(7, 5) == 3);
  CHECK(g.spec() == "C9");

  CHECK(mcs::group_from_spec("S3").order() == 6);
  CHECK(mcs::group_from_spec("Heis(3)").order() == 27);
  CHECK(mcs::group_from_spec("M(3)").order() == 27);
  CHECK(mcs::group_from_spec("C1").order() == 1);
}

TEST_CASE("products") {
  auto g = mcs::group_from_spec("C3 x C3");
  CHECK(g.order() == 9);
  CHECK(g.name(g.op(g.element("01"), g.element("12"))) == "10");

  CHECK(mcs::group_from_spec("C9xC3xC3xC4xC4").order() == 1296);
  CHECK(mcs::group_from_spec("C2 × C2").order() == 4);  // unicode sign accepted
  CHECK(mcs::group_from_spec("Heis(3) x C3").order() == 81);
  CHECK(mcs::group_from_spec("  C2x( C2 x C2 ) ").order() == 8);
}

TEST_CASE("left association shapes the tree") {
  auto ast = mcs::parse_group_spec("C2 x C3 x C4");
  REQUIRE(ast.kind == GroupSpecAst::Kind::kProduct);
  REQUIRE(ast.left);
  CHECK(ast.left->kind == GroupSpecAst::Kind::kProduct);
  CHECK(ast.right->kind == GroupSpecAst::Kind::kCyclic);
  CHECK(ast.right->n == 4);

  auto grouped = mcs::parse_group_spec("C2 x (C3 x C4)");
  CHECK(grouped.left->kind == GroupSpecAst::Kind::kCyclic);
  CHECK(grouped.right->kind == GroupSpecAst::Kind::kProduct);
}

TEST_CASE("render produces a canonical round-trip") {
  for (const char* text :
       {"C3 x C3", "C9 x C3 x C3 x C4 x C4", "Heis(3) x C3", "M(5)",
        "C2 x (C2 x C2)", "S4 x C2"}) {
    CAPTURE(text);
    auto rendered = mcs::render_spec(mcs::parse_group_spec(text));
    CHECK(rendered == text);
    // canonical form is a fixed point
    CHECK(mcs::render_spec(mcs::parse_group_spec(rendered)) == rendered);
  }
  // noise normalizes away
  CHECK(mcs::render_spec(mcs::parse_group_spec("C9xC3xC3xC4xC4")) ==
        "C9 x C3 x C3 x C4 x C4");
  CHECK(mcs::render_spec(mcs::parse_group_spec("C2×C2")) == "C2 x C2");
  CHECK(mcs::render_spec(mcs::parse_group_spec("(C2 x C2) x C2")) ==
        "C2 x C2 x C2");
}

TEST_CASE("built groups carry their canonical spec") {
  CHECK(mcs::group_from_spec("C3xC3").spec() == "C3 x C3");
  CHECK(mcs::group_from_spec("Heis(3)").spec() == "Heis(3)");
}

TEST_CASE("syntax errors carry a position") {
  auto expect_error = [](const char* text, std::size_t position) {
    CAPTURE(text);
    try {
      mcs::parse_group_spec(text);
      FAIL("expected SpecError");
    } catch (const SpecError& e) {
      CHECK(e.position() == position);
    }
  };
  expect_error("", 0);
  expect_error("C", 1);          // missing integer
  expect_error("Cx3", 1);
  expect_error("C3 x", 4);       // dangling product
  expect_error("C3 ) ", 3);      // trailing junk
  expect_error("(C3", 3);        // unclosed paren
  expect_error("Heis3)", 4);     // missing open paren
  expect_error("Q8", 0);         // unknown constructor
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(mcs::parse_group_spec("Heis(2)"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("Heis(9)"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("M(4)"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("C0"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("S6"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("S0"), SpecError);
  CHECK_THROWS_AS(mcs::parse_group_spec("C99999999999"), SpecError);
}
