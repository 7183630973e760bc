#include <gtest/gtest.h>

#include "lgq/polytext.hpp"
#include "lgq/properties.hpp"
#include "lgq/quadric_qh.hpp"

using namespace lgq;

namespace {

const VarSetPtr& xyz() {
  static const VarSetPtr v = make_varset({"x", "y", "z"});
  return v;
}

LaurentPoly P(const char* s) { return parse_laurent(s, xyz(), qh::q_params()); }

}  // namespace

TEST(PolyText, PrintsCanonically) {
  EXPECT_EQ(to_string(P("y*x + x*y")), "2*x*y");
  EXPECT_EQ(to_string(P("x^-1 - 1")), "-1+x^-1");
  EXPECT_EQ(to_string(P("(q^2+1)/(2*q)*x^2")), "(q^2+1)/(2*q)*x^2");
  EXPECT_EQ(to_string(P("0")), "0");
}

TEST(PolyText, WhitespaceIsInsignificant) {
  EXPECT_EQ(P(" x * y ^ 2 - 3 / 4 "), P("x*y^2-3/4"));
}

TEST(PolyText, NegativeExponentsAndMonomialDivision) {
  EXPECT_EQ(P("x/y"), P("x*y^-1"));
  EXPECT_EQ(P("(x+y)/(2*x)"), P("1/2+1/2*x^-1*y"));
}

TEST(PolyText, RationalExpressions) {
  auto e = parse_rational("(x+1)/(y-1)", xyz(), qh::q_params());
  EXPECT_EQ(e * RationalExpr(P("y-1")), RationalExpr(P("x+1")));
}

TEST(PolyText, Errors) {
  EXPECT_THROW(P("x+"), ParseError);
  EXPECT_THROW(P("w"), Error);
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P("(x+1)/(y+1)"), ParseError);
  EXPECT_THROW(P("x*/y"), ParseError);
}

TEST(PolyText, RoundTripProperty) {
  auto o = props::polytext_round_trip(2024, 300);
  EXPECT_EQ(o.cases, 300u);
  EXPECT_EQ(o.failures, 0u) << o.first_failure;
}
