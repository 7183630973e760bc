#include <gtest/gtest.h>

#include "lgq/groebner.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"

using namespace lgq;
using gb::MonomialOrder;

namespace {

const VarSetPtr& xyz() {
  static const VarSetPtr v = make_varset({"x", "y", "z"});
  return v;
}
const VarSetPtr& none() {
  static const VarSetPtr p = make_varset(std::vector<std::string>{});
  return p;
}

LaurentPoly P(const char* s) { return parse_laurent(s, xyz(), none()); }

gb::PolyIdeal ideal(std::vector<const char*> gens, MonomialOrder o = MonomialOrder::grevlex()) {
  std::vector<LaurentPoly> g;
  for (auto s : gens) g.push_back(P(s));
  return gb::PolyIdeal(xyz(), none(), g, o);
}

std::vector<std::string> texts(const gb::GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.basis()) out.push_back(to_string(g));
  return out;
}

}  // namespace

TEST(MonomialOrder, Comparisons) {
  auto lex = MonomialOrder::lex();
  auto grl = MonomialOrder::grevlex();
  EXPECT_EQ(lex.compare(Monomial({1, 0, 0}), Monomial({0, 5, 0})), std::strong_ordering::greater);
  EXPECT_EQ(grl.compare(Monomial({1, 0, 0}), Monomial({0, 5, 0})), std::strong_ordering::less);
  // x*z < y^2 in grevlex
  EXPECT_EQ(grl.compare(Monomial({1, 0, 1}), Monomial({0, 2, 0})), std::strong_ordering::less);
  auto blk = MonomialOrder::block_order(1);
  EXPECT_EQ(blk.compare(Monomial({1, 0, 0}), Monomial({0, 3, 3})), std::strong_ordering::greater);
}

TEST(Buchberger, LexBasisOfTwoCurves) {
  auto G = gb::buchberger(ideal({"x^2-y", "x*y-1", "z"}, MonomialOrder::lex()));
  EXPECT_EQ(texts(G), (std::vector<std::string>{"z", "y^3-1", "x-y^2"}));
  EXPECT_EQ(G.quotient_dimension(), 3u);
}

TEST(Buchberger, UnitIdeal) {
  auto G = gb::buchberger(ideal({"x*y-1", "x"}));
  EXPECT_TRUE(G.is_unit());
  EXPECT_EQ(G.quotient_dimension(), 0u);
}

TEST(Buchberger, PositiveDimensional) {
  auto G = gb::buchberger(ideal({"x*y"}));
  EXPECT_FALSE(G.quotient_dimension().has_value());
  EXPECT_THROW(G.staircase(), Error);
}

TEST(Buchberger, StaircaseAndNormalForm) {
  auto G = gb::buchberger(ideal({"x^2", "y^2", "z"}));
  EXPECT_EQ(G.quotient_dimension(), 4u);
  EXPECT_EQ(G.normal_form(P("x^2*y+x*y+z")), P("x*y"));
}

TEST(Buchberger, CofactorLift) {
  gb::Options o;
  o.track_cofactors = true;
  auto I = ideal({"x^2-y", "x*y-1"});
  auto G = gb::buchberger(I, o);
  LaurentPoly target = P("y^3-1");
  auto h = G.lift(target);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0] * I.generators()[0] + h[1] * I.generators()[1], target);
  EXPECT_THROW(G.lift(P("x")), Error);
}

TEST(Buchberger, BudgetExceeded) {
  gb::Options o;
  o.max_pairs = 1;
  EXPECT_THROW(gb::buchberger(ideal({"x^2*y-z^3", "x*z^2-y^2", "y*z-x^3"}), o), ResourceBudgetExceeded);
  // coprime leading terms: every pair is pruned, nothing is spent
  EXPECT_NO_THROW(gb::buchberger(ideal({"x^3-y*z", "y^3-x*z", "z^3-x*y"}), o));
}

TEST(Buchberger, ParametricCoefficients) {
  auto I = gb::PolyIdeal(xyz(), qh::q_params(),
                         {parse_laurent("x^2-q", xyz(), qh::q_params()), parse_laurent("y-q*x", xyz(), qh::q_params()),
                          parse_laurent("z", xyz(), qh::q_params())});
  EXPECT_EQ(gb::buchberger(I).quotient_dimension(), 2u);
}

TEST(Ideals, SaturationRemovesComponent) {
  // (x*z, y*z, z^2) lives on z = 0, so saturating by z gives the unit ideal.
  auto I = ideal({"x*z", "y*z", "z^2"});
  auto S = gb::saturate(I, P("z"));
  EXPECT_TRUE(gb::buchberger(S).is_unit());
  auto J = ideal({"x*y-x", "y^2-y", "z"});
  auto T = gb::saturate(J, P("y"));
  EXPECT_TRUE(gb::ideals_equal(T, ideal({"y-1", "z"})));
}

TEST(Ideals, Elimination) {
  auto I = ideal({"x-y^2", "z-y^3"});
  auto E = gb::eliminate(I, {"y"});
  for (const auto& g : E.generators()) EXPECT_FALSE(g.involves("y"));
  EXPECT_TRUE(gb::ideals_equal(E, ideal({"x^3-z^2"})));
}

TEST(Ideals, RadicalAndZeroSets) {
  auto I = ideal({"x^2", "y", "z"});
  EXPECT_TRUE(gb::radical_contains(I, P("x")));
  EXPECT_FALSE(gb::buchberger(I).contains(P("x")));
  EXPECT_TRUE(gb::same_zero_set(I, ideal({"x", "y", "z"})));
  EXPECT_FALSE(gb::same_zero_set(I, ideal({"x-1", "y", "z"})));
}

TEST(LocalDimension, MilnorNumbersOfSimpleSingularities) {
  // Jacobian ideals of x^2 + y^3 (A2) and x^4 + y^2 (A3), z a trivial direction.
  EXPECT_EQ(gb::local_dimension_at_origin(ideal({"x", "y^2", "z"}), 8), 2u);
  EXPECT_EQ(gb::local_dimension_at_origin(ideal({"x^3", "y", "z"}), 8), 3u);
  // A second point at y = 1 does not count.
  EXPECT_EQ(gb::local_dimension_at_origin(ideal({"x^3", "y^2-y", "z"}), 8), 3u);
  EXPECT_THROW(gb::local_dimension_at_origin(ideal({"x-1", "y", "z"}), 8), OriginNotInVariety);
}

TEST(LocalDimension, LocalBasisTruncates) {
  auto G = gb::local_basis(ideal({"x+x^5", "y-y^4", "z"}), 3);
  EXPECT_EQ(G.quotient_dimension(), 1u);
}
