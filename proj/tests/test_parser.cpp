#include <string>

#include "doctest.h"
#include "circq/errors.hpp"
#include "circq/fields.hpp"

using circq::parse_field;
using circq::parse_polynomial;
using circq::Point4;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_polynomial(text);
  } catch (const circq::ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

std::string error_detail(const char* text) {
  try {
    parse_polynomial(text);
  } catch (const circq::ParseError& e) {
    return e.detail();
  }
  FAIL("expected a parse error for " << text);
  return {};
}

} // namespace

TEST_CASE("parse and evaluate") {
  CHECK(parse_field("x1^2 + 2*x2*x4").value(Point4{{1, 2, 3, 4}}) == 17.0);
  CHECK(parse_field("  x1 ^ 2+2 * x2*x4 ").value(Point4{{1, 2, 3, 4}}) == 17.0);
  CHECK(parse_field("-x1^2").value(Point4{{3, 0, 0, 0}}) == -9.0);
  CHECK(parse_field("2^3").value(Point4{}) == 8.0);
  CHECK(parse_field("3/4*x2").value(Point4{{0, 2, 0, 0}}) == 1.5);
  CHECK(parse_field("1.5e2 - .5").value(Point4{}) == 149.5);
  CHECK(parse_field("(x1 + x2)^0").value(Point4{{5, 6, 7, 8}}) == 1.0);
}

TEST_CASE("example B parses to the expected canonical form") {
  const auto b = parse_polynomial("x1*x2 + x2*x3 + x1*x4 + x3*x4");
  CHECK(b.to_string() == "x1*x2 + x1*x4 + x2*x3 + x3*x4");
  CHECK(b == parse_polynomial("(x1 + x3)*(x2 + x4)"));
}

TEST_CASE("grammar violations") {
  CHECK(error_detail("x1^-1") == "negative exponent");
  CHECK(error_position("x1^-1") == 3);
  CHECK(error_detail("x1^1.5") == "exponent must be a non-negative integer");
  CHECK(error_detail("y + 1") == "unknown identifier 'y'");
  CHECK(error_position("x1 + x5") == 5);
  CHECK(error_detail("2x1").find("implicit multiplication") != std::string::npos);
  CHECK(error_position("2x1") == 1);
  CHECK(error_detail("x1 (x2)").find("implicit multiplication") != std::string::npos);
  CHECK(error_detail("x1/2") == "division is only allowed between numeric literals");
  CHECK(error_detail("1/x2") == "division is only allowed between numeric literals");
  CHECK(error_detail("1/0") == "division by zero");
  CHECK(error_detail("(x1 + x2") == "expected ')'");
  CHECK(error_detail("") == "empty expression");
  CHECK(error_detail("x1 +") == "unexpected end of expression");
  CHECK(error_detail("x1 ^ 2 ^ 2") == "chained exponents need parentheses");
  CHECK(error_detail("x1 $ 2").find("unexpected character") != std::string::npos);
  CHECK_THROWS_AS(parse_field("x1^65"), circq::ParseError);
}

TEST_CASE("property: parse . print . parse is idempotent") {
  const char* corpus[] = {
      "0",
      "5",
      "-3.25",
      "x1",
      "-x4",
      "x1^2 + x2^2 + x3^2 + x4^2",
      "x1*x2 + x2*x3 + x1*x4 + x3*x4",
      "2*x1*x3 + 2*x2*x4",
      "(x1 - x2)^3",
      "(x1 + x2 + x3 + x4)^4 - 1",
      "1/3*x1 - 2/7*x2",
      "0.1*x1 + 0.2*x2 + 0.3*x3",
      "1e-20*x1^2 + 1e20",
      "x1*x1 - x1^2 + x3",
      "-(x1 - 2)*(x3 + 0.5)",
      "x4^7*x1 - x2^3*x3^2*x4",
      "3*x1*x2*x3*x4 + 2",
      "(2*x1 - x3)^2 - 4*x2*x4",
      "--x2 + +x3",
      "1/3",
      "123456789.123456789*x2",
      "(x1^2 + 1)*(x2^2 - 1)*(x3 + x4)",
  };
  for (const char* text : corpus) {
    CAPTURE(text);
    const auto once = parse_polynomial(text);
    const std::string printed = once.to_string();
    const auto twice = parse_polynomial(printed);
    CHECK(twice == once);
    CHECK(twice.to_string() == printed);
  }
}
