#include <gtest/gtest.h>

#include "lgq/generators.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"
#include "lgq/scalar.hpp"

using namespace lgq;

namespace {

const VarSetPtr& Q() { return qh::q_params(); }
RatFunc rf(const char* s) { return parse_scalar(s, Q()); }

}  // namespace

TEST(BigRat, LowestTermsPositiveDenominator) {
  BigRat a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(to_string(a), "-3/2");
  BigRat z(0, 7);
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
}

TEST(BigRat, Parse) {
  EXPECT_EQ(BigRat::parse("-10/4"), BigRat(-5, 2));
  EXPECT_EQ(BigRat::parse("7"), BigRat(7));
  EXPECT_THROW(BigRat::parse("1/0"), Error);
  EXPECT_THROW(BigRat::parse("x"), Error);
}

TEST(BigRat, DivisionByZero) {
  EXPECT_THROW(BigRat(1) / BigRat(0), DivisionByZero);
  EXPECT_THROW(BigRat(0).inverse(), DivisionByZero);
}

TEST(RatFunc, CanonicalForm) {
  RatFunc a = rf("(q^2-1)/(2*q-2)");
  EXPECT_EQ(to_string(a), "1/2*q+1/2");
  EXPECT_EQ(a, rf("(q+1)/2"));
  EXPECT_EQ(to_string(rf("3/(6*q)")), "1/(2*q)");
}

TEST(RatFunc, FieldOperations) {
  RatFunc q = RatFunc::param(Q(), "q");
  RatFunc x = (q + RatFunc(1)) / (q - RatFunc(1));
  EXPECT_EQ(x * x.inverse(), RatFunc(1));
  EXPECT_EQ(x - x, RatFunc(0));
  EXPECT_EQ(q.pow(-2) * q.pow(3), q);
  EXPECT_THROW(RatFunc(0).inverse(), DivisionByZero);
}

TEST(RatFunc, Specialize) {
  RatFunc x = rf("(q^2+1)/(q-2)");
  EXPECT_EQ(x.specialize(0, BigRat(3)), RatFunc(10));
  EXPECT_THROW(x.specialize(0, BigRat(2)), PoleAtPoint);
}

TEST(RatFunc, ConstantsPromote) {
  RatFunc c(BigRat(3, 4));
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c + RatFunc::param(Q(), "q"), rf("q+3/4"));
}

TEST(CubicExt, XiCubedIsFourQ) {
  CubicExt xi = CubicExt::xi(Q());
  EXPECT_EQ(xi * xi * xi, CubicExt(Q(), rf("4*q")));
  EXPECT_EQ(to_string(xi * xi), "xi^2");
  EXPECT_EQ(xi * xi.inverse(), CubicExt(Q(), RatFunc(1)));
}

TEST(CubicExt, MultiplicationIsBilinear) {
  gen::Rng rng(11);
  auto rand_ext = [&] {
    return CubicExt(Q(), gen::coefficient(rng, Q()), gen::coefficient(rng, Q()), gen::coefficient(rng, Q()));
  };
  for (int i = 0; i < 50; ++i) {
    CubicExt a = rand_ext(), b = rand_ext(), c = rand_ext();
    CubicExt s(Q(), gen::coefficient(rng, Q()));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((s * a) * b, s * (a * b));
  }
}
