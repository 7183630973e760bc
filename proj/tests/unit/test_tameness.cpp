#include <gtest/gtest.h>

#include <set>

#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"
#include "lgq/tameness.hpp"

using namespace lgq;
using namespace lgq::tame;

namespace {

LaurentPoly in_chart(const Chart& c, const char* s) { return parse_laurent(s, c.vars, qh::q_params()); }

}  // namespace

TEST(Tameness, ClosureEquation) {
  auto cl = graph_closure_equation();
  EXPECT_TRUE(cl.restriction_matches);
  EXPECT_TRUE(cl.graph_relation);
  EXPECT_TRUE(cl.shift_identity);
  EXPECT_TRUE(cl.scaling_degree);
  EXPECT_EQ(cl.surface.bidegree, (std::array<int, 3>{2, 2, 2}));
  auto c = make_chart(0, 0, 0);
  EXPECT_EQ(cl.affine, in_chart(c, "q*x^2+x*y^2*z^2+x*y^2*z-x*y*z*t-y*z^2-y*z+z*t"));
}

TEST(Tameness, PairDegree) {
  auto p = parse_laurent("x0^2*x1+x1^3*y0", homogeneous_vars(), qh::q_params());
  EXPECT_EQ(pair_degree(p, "x0", "x1"), 3);
  EXPECT_FALSE(pair_degree(p, "y0", "y1").has_value());
}

TEST(Tameness, Charts) {
  auto all = all_charts();
  ASSERT_EQ(all.size(), 8u);
  std::set<std::string> labels;
  for (const auto& c : all) labels.insert(c.label());
  EXPECT_EQ(labels.size(), 8u);
  EXPECT_EQ(parse_chart("V010").label(), "V010");
  EXPECT_EQ(parse_chart("110").boundary_vars(), (std::vector<std::string>{"xp", "yp"}));
  EXPECT_THROW(parse_chart("0101"), UsageError);
  EXPECT_THROW(parse_chart("012"), UsageError);
}

TEST(Tameness, SingularLociMatchPublishedOnes) {
  std::size_t with_expectation = 0;
  for (const auto& s : singular_survey()) {
    if (!s.matches_expected) continue;
    ++with_expectation;
    EXPECT_TRUE(*s.matches_expected) << s.chart << " " << s.expected;
  }
  EXPECT_GE(with_expectation, 8u);
}

TEST(Tameness, TwoSingularLinesInV010) {
  auto s = chart_singular_locus(parse_chart("010"), {"yp"});
  EXPECT_FALSE(s.empty);
  ASSERT_TRUE(s.matches_expected.has_value());
  EXPECT_TRUE(*s.matches_expected);
}

TEST(Tameness, InteriorLocusInV000) {
  auto s = chart_singular_locus(parse_chart("000"), {});
  EXPECT_EQ(s.matches_expected, true);
}

TEST(Tameness, Jacobians) {
  auto c = parse_chart("000");
  auto r = rewritten_equation_check(c);
  EXPECT_EQ(r.jacobian.determinant, in_chart(c, "x*y-z-1"));
  EXPECT_TRUE(r.jacobian.nonvanishing);
  auto c010 = parse_chart("010");
  auto r010 = rewritten_equation_check(c010);
  EXPECT_EQ(r010.jacobian.determinant, in_chart(c010, "1+2*z-t*yp"));
  auto id = jacobian_of_change(c, {in_chart(c, "x"), in_chart(c, "y"), in_chart(c, "z")}, {});
  EXPECT_EQ(id.determinant, in_chart(c, "1"));
  auto degenerate = jacobian_of_change(c, {in_chart(c, "x"), in_chart(c, "y"), in_chart(c, "z^2")}, {in_chart(c, "z")});
  EXPECT_FALSE(degenerate.nonvanishing);
}

TEST(Tameness, RewrittenEquations) {
  for (const char* l : {"000", "010", "110"}) {
    auto r = rewritten_equation_check(parse_chart(l));
    EXPECT_TRUE(r.identity_holds) << l;
    EXPECT_TRUE(r.t_free) << l;
  }
  EXPECT_THROW(rewritten_equation_check(parse_chart("111")), UsageError);
}

TEST(Tameness, FiberVersusTotal) {
  EXPECT_TRUE(fiber_vs_total_boundary(parse_chart("010"), {"yp"}).equal);
  EXPECT_TRUE(fiber_vs_total_boundary(parse_chart("111"), {"xp", "yp", "zp"}).equal);
  EXPECT_FALSE(fiber_vs_total_boundary(parse_chart("000"), {}).equal);
}

TEST(Tameness, MuConstancy) {
  auto mu = mu_constancy_V101({BigRat(0), BigRat(1), BigRat(-1), BigRat(2), BigRat(7)});
  EXPECT_EQ(mu.mu, (std::vector<std::size_t>{4, 4, 4, 4, 4}));
  EXPECT_EQ(mu.mu_symbolic, 4u);
  EXPECT_TRUE(mu.constant);
  EXPECT_TRUE(mu.staircases_specialize);
  EXPECT_EQ(mu.pole_ts, (std::vector<BigRat>{BigRat(0)}));
  EXPECT_TRUE(mu.factorization_x);
  EXPECT_TRUE(mu.factorization_y);
  ASSERT_EQ(mu.pairs.size(), 6u);
  for (const auto& p : mu.pairs) EXPECT_FALSE(p.at_origin.is_zero()) << p.a << p.b;
}

TEST(Tameness, ZIsAProduct) {
  auto z = z_is_product_check();
  EXPECT_TRUE(z.ideals_equal);
  EXPECT_TRUE(z.reduced_t_free);
  EXPECT_TRUE(z.control_differs);
}

TEST(Tameness, ChartCompatibility) {
  auto c = chart_compatibility();
  EXPECT_EQ(c.pairs, 28u);
  EXPECT_EQ(c.agreeing, 28u);
  EXPECT_TRUE(c.failures.empty());
}
