#include <gtest/gtest.h>

#include "lgq/laurent.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"

using namespace lgq;

namespace {

const VarSetPtr& xy() {
  static const VarSetPtr v = make_varset({"x", "y"});
  return v;
}
const VarSetPtr& uv() {
  static const VarSetPtr v = make_varset({"u", "v"});
  return v;
}

LaurentPoly P(const char* s) { return parse_laurent(s, xy(), qh::q_params()); }
LaurentPoly U(const char* s) { return parse_laurent(s, uv(), qh::q_params()); }

}  // namespace

TEST(Laurent, Arithmetic) {
  EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2"));
  EXPECT_EQ(P("x^-1") * P("x"), P("1"));
  EXPECT_TRUE((P("q*x") - P("q*x")).is_zero());
  EXPECT_EQ(P("x*y^-1").pow(-2), P("x^-2*y^2"));
  EXPECT_THROW(P("x+y").pow(-1), Error);
}

TEST(Laurent, Derivatives) {
  EXPECT_EQ(partial_derivative(P("x^3*y^-2+q*x"), "x"), P("3*x^2*y^-2+q"));
  EXPECT_EQ(partial_derivative(P("x^3*y^-2"), "y"), P("-2*x^3*y^-3"));
  EXPECT_EQ(log_derivative(P("x^3*y^-2+5"), "y"), P("-2*x^3*y^-2"));
}

TEST(Laurent, MismatchedVariablesRejected) {
  EXPECT_THROW(P("x") + U("u"), VarSetMismatch);
}

TEST(Laurent, SubstitutionLiteral) {
  Substitution s{{"x", RationalExpr(U("u+v"))}, {"y", RationalExpr(U("1"), U("v"))}};
  RationalExpr r = substitute(P("x*y-1"), s, uv());
  EXPECT_EQ(r, RationalExpr(U("u"), U("v")));
  EXPECT_THROW(substitute(P("x"), Substitution{}, uv()), Error);
}

TEST(Laurent, RationalExprCrossMultiplication) {
  RationalExpr a(P("x^2-1"), P("x-1"));
  RationalExpr b(P("x+1"));
  EXPECT_EQ(a, b);
  EXPECT_THROW(RationalExpr(P("1"), P("0")), ZeroDenominator);
}

TEST(Laurent, ClearDenominators) {
  auto c = clear_denominators(P("x^-2*y+y^-1"));
  EXPECT_EQ(c.poly, P("y^2+x^2"));
  EXPECT_EQ(c.monomial, Monomial({2, 1}));
}

TEST(Laurent, EvaluateAtCubicPoint) {
  CubicExt xi = CubicExt::xi(qh::q_params());
  CubicExt v = eval_at(P("x^3-4*q"), std::vector<CubicExt>{xi, CubicExt(qh::q_params(), RatFunc(1))});
  EXPECT_TRUE(v.is_zero());
}
