#include <gtest/gtest.h>

#include "lgq/gauss_manin.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"
#include "lgq/report.hpp"

using namespace lgq;

namespace {

const gm::Engine& engine() {
  static const gm::Engine e(1);
  return e;
}

LaurentPoly D(std::size_t i) { return LaurentPoly::variable(engine().delta_vars(), qh::q_params(), i); }
LaurentPoly G(const char* s) { return parse_laurent(s, engine().delta_vars(), qh::q_params()); }

}  // namespace

TEST(GaussManin, LogFormsVanish) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(engine().reduce_class(engine().log_forms()[i]).is_zero()) << i;
}

TEST(GaussManin, SquaredLogFormIsThetaOmega) {
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(gm::to_string(engine().reduce_class(D(i) * engine().log_forms()[i])), "theta*w" + std::to_string(i + 1));
}

TEST(GaussManin, MixedLogFormsVanish) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) EXPECT_TRUE(engine().reduce_class(D(j) * engine().log_forms()[i]).is_zero()) << i << j;
}

TEST(GaussManin, BasisClassesAreThemselves) {
  EXPECT_EQ(gm::to_string(engine().reduce_class(G("1"))), "w0");
  EXPECT_EQ(gm::to_string(engine().reduce_class(G("D3"))), "w3");
  EXPECT_EQ(gm::to_string(engine().reduce_class(G("2*D1-q*D2"))), "-q*w2+2*w1");
}

TEST(GaussManin, ThetaSquaredDerivative) {
  EXPECT_EQ(gm::to_string(engine().theta2_dtheta(0)), "3*w1");
  EXPECT_EQ(gm::to_string(engine().theta2_dtheta(1)), "6*w2+theta*w1");
  EXPECT_EQ(gm::to_string(engine().theta2_dtheta(2)), "3*w3+2*theta*w2+3*q*w0");
  EXPECT_EQ(gm::to_string(engine().theta2_dtheta(3)), "3*theta*w3+3*q*w1");
}

TEST(GaussManin, BrieskornClassShift) {
  gm::BrieskornClass c{{1, G("D1")}, {0, G("D2")}};
  EXPECT_EQ(gm::to_string(engine().reduce_class(c)), "w2+theta*w1");
}

TEST(GaussManin, ConnectionMatrices) {
  auto c = engine().connection_matrices();
  EXPECT_EQ(report::matrix_text(c.A0), "[[0,0,3*q,0],[3,0,0,3*q],[0,6,0,0],[0,0,3,0]]");
  EXPECT_EQ(report::matrix_text(c.Ainf), "[[0,0,0,0],[0,1,0,0],[0,0,2,0],[0,0,0,3]]");
}

TEST(GaussManin, BudgetExhaustion) {
  EXPECT_THROW(engine().theta2_dtheta(1, 0), ResourceBudgetExceeded);
  EXPECT_THROW(engine().reduce_class(G("D3^3"), 2), ResourceBudgetExceeded);
}

TEST(GaussManin, StatsAreRecorded) {
  gm::ReductionStats st;
  engine().reduce_class(G("D3^2"), 8, &st);
  EXPECT_EQ(st.levels, 3);
  EXPECT_GT(st.unknowns, 0u);
  EXPECT_TRUE(st.coefficients_unique);
}

TEST(GaussManin, RingIdentities) {
  auto ids = gm::verify_ring_identities();
  ASSERT_EQ(ids.size(), 5u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(ids[i].holds) << ids[i].name;
  EXPECT_FALSE(ids[4].holds);
}

TEST(GaussManin, VFiltration) {
  auto v = gm::v_filtration_gr(engine().connection_matrices(), 0);
  EXPECT_EQ(report::matrix_text(v.N), "[[0,0,0,0],[-3,0,0,0],[0,-6,0,0],[0,0,-3,0]]");
  EXPECT_TRUE(v.diagonal_cancels);
  EXPECT_TRUE(v.cube_nonzero);
  EXPECT_TRUE(v.fourth_power_zero);
  EXPECT_EQ(v.nilpotency_index, 4u);
}

TEST(GaussManin, PairingConstraints) {
  auto p = gm::solve_pairing_constraints(engine().connection_matrices(), 3);
  EXPECT_EQ(p.dimension, 1u);
  EXPECT_TRUE(p.only_antidiagonal);
  EXPECT_TRUE(p.antidiagonal_equal);
  EXPECT_TRUE(p.antidiagonal_tau_minus3);
  ASSERT_EQ(p.S.size(), 4u);
  EXPECT_EQ(gm::to_string(p.S[1][3]), "0");
  EXPECT_EQ(gm::to_string(p.S[0][3]), gm::to_string(p.S[3][0]));
  EXPECT_EQ(gm::to_string(p.S[2][1]), gm::to_string(p.S[1][2]));
}

TEST(GaussManin, Canonicity) {
  auto c = gm::birkhoff_canonicity_check(7, 5);
  EXPECT_EQ(c.samples, 5u);
  EXPECT_TRUE(c.all_match);
  for (const auto& sample : c.per_sample)
    for (const auto& s : sample) EXPECT_EQ(s.computed_dim, static_cast<std::size_t>(4 - s.p));
}

TEST(GaussManin, InitialConditionsMatch) {
  auto c = engine().connection_matrices();
  auto p = gm::solve_pairing_constraints(c, 3);
  auto m = gm::initial_conditions_match(c, 1, &p);
  EXPECT_TRUE(m.a0_matches);
  EXPECT_TRUE(m.ainf_matches);
  EXPECT_EQ(m.pairing_matches, true);
  c.A0(1, 0) = RatFunc(4);
  auto bad = gm::initial_conditions_match(c, 1);
  EXPECT_FALSE(bad.a0_matches);
  EXPECT_FALSE(bad.mismatches.empty());
}

TEST(GaussManin, FiveFoldConnection) {
  gm::Engine e2(2);
  auto c = e2.connection_matrices();
  EXPECT_EQ(c.A0, RatFunc(5) * qh::qh_mult_matrix(2).M);
  EXPECT_EQ(report::matrix_text(c.Ainf),
            "[[0,0,0,0,0,0],[0,1,0,0,0,0],[0,0,2,0,0,0],[0,0,0,3,0,0],[0,0,0,0,4,0],[0,0,0,0,0,5]]");
}
