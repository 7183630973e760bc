#include <gtest/gtest.h>

#include "lgq/lg_potential.hpp"
#include "lgq/polytext.hpp"

using namespace lgq;

TEST(Potential, StandardPotentialForThreefold) {
  auto f = lg::build_standard_potential(1);
  EXPECT_EQ(to_string(f.f), "D1+1/2*D2^-1*D3+q*D2^-1+1/2*q^2*D2^-1*D3^-1+2*D1^-1*D2");
  ASSERT_EQ(f.terms.size(), 3u);
  EXPECT_EQ(to_string(f.terms[0]), "D1");
}

TEST(Potential, LogDerivatives) {
  auto f = lg::build_standard_potential(1);
  auto L = lg::log_derivatives(f);
  ASSERT_EQ(L.size(), 3u);
  EXPECT_EQ(L[0], parse_laurent("D1-2*D1^-1*D2", f.vars, f.f.params()));
  EXPECT_EQ(L[2], parse_laurent("1/2*D2^-1*D3-1/2*q^2*D2^-1*D3^-1", f.vars, f.f.params()));
}

TEST(Potential, IntegratesTheTable) {
  auto f = lg::build_standard_potential(1);
  auto res = lg::integrates_table(f, qh::qh_mult_matrix(1));
  ASSERT_EQ(res.line_holds.size(), 3u);
  for (bool b : res.line_holds) EXPECT_TRUE(b);
  EXPECT_TRUE(res.ideals_equal);
  EXPECT_EQ(res.log_ideal_degree, 3u);
  EXPECT_EQ(res.table_ideal_degree, 3u);
  ASSERT_TRUE(res.printed_line2_holds.has_value());
  EXPECT_FALSE(*res.printed_line2_holds);
}

TEST(Potential, TableLogFormsMatchDerivatives) {
  auto f = lg::build_standard_potential(1);
  auto table = lg::table_log_forms(1);
  auto L = lg::log_derivatives(f);
  ASSERT_EQ(table.size(), L.size());
  EXPECT_EQ(table[2], L[2]);
}

TEST(Compactification, Identities) {
  auto cp = lg::compactify(lg::build_standard_potential(1));
  EXPECT_TRUE(cp.identity_holds);
  EXPECT_TRUE(cp.y_identity_holds);
  EXPECT_TRUE(cp.inverse_identity_holds);
  EXPECT_EQ(to_string(cp.boundary), to_string(parse_laurent("(x*y-1)*(1+z)", cp.vars, cp.f.num().params())));
  EXPECT_EQ(cp.f, lg::compactified_closed_form(1));
}

TEST(Compactification, CriticalSchemes) {
  auto f = lg::build_standard_potential(1);
  EXPECT_EQ(lg::critical_scheme(lg::compactify(f)).degree, 4u);
  EXPECT_EQ(lg::critical_scheme(f).degree, 3u);
}

TEST(Compactification, CriticalPoints) {
  auto r = lg::verify_critical_points();
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_EQ(r.points[0].label, "P0");
  EXPECT_TRUE(r.points[0].vanishes);
  EXPECT_EQ(r.points[1].label, "Pi");
  EXPECT_TRUE(r.points[1].vanishes);
  EXPECT_FALSE(r.probe.vanishes);
  EXPECT_TRUE(r.distinct);
}

TEST(Compactification, MilnorRingBasis) {
  auto m = lg::milnor_ring_basis_check();
  EXPECT_EQ(m.staircase.size(), 4u);
  EXPECT_EQ(m.rank, 4u);
  EXPECT_EQ(m.coordinates.rows(), 4u);
}

TEST(Potential, FiveFold) {
  auto f = lg::build_standard_potential(2);
  auto res = lg::integrates_table(f, qh::qh_mult_matrix(2));
  EXPECT_TRUE(res.ideals_equal);
  auto cp = lg::compactify(f);
  EXPECT_TRUE(cp.identity_holds);
  EXPECT_EQ(lg::critical_scheme(cp).degree, 6u);
}

TEST(Potential, PartialNumerators) {
  auto v = make_varset({"x"});
  auto P = make_varset({"q"});
  auto n = lg::partial_numerators(parse_rational("(x^2+1)/(x+1)", v, P));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(to_string(n[0]), "x^2+2*x-1");
  // monomial denominators are absorbed into the Laurent numerator
  EXPECT_EQ(to_string(lg::partial_numerators(parse_rational("(x^2+1)/x", v, P))[0]), "1-x^-2");
}
