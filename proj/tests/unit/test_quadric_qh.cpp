#include <gtest/gtest.h>

#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"
#include "lgq/report.hpp"

using namespace lgq;

TEST(QuadricQh, TableForThreefold) {
  auto A = qh::qh_mult_matrix(1);
  EXPECT_EQ(A.dim, 4u);
  EXPECT_EQ(qh::product_text(A, 0), "D1");
  EXPECT_EQ(qh::product_text(A, 1), "2*D2");
  EXPECT_EQ(qh::product_text(A, 2), "D3+q*D0");
  EXPECT_EQ(qh::product_text(A, 3), "q*D1");
  EXPECT_EQ(report::matrix_text(A.M), "[[0,0,q,0],[1,0,0,q],[0,2,0,0],[0,0,1,0]]");
}

TEST(QuadricQh, InitialConditionsForThreefold) {
  auto ic = qh::initial_conditions(1);
  EXPECT_EQ(report::matrix_text(ic.U), "[[0,0,3*q,0],[3,0,0,3*q],[0,6,0,0],[0,0,3,0]]");
  EXPECT_EQ(report::matrix_text(ic.V), "[[3/2,0,0,0],[0,1/2,0,0],[0,0,-1/2,0],[0,0,0,-3/2]]");
  EXPECT_EQ(report::matrix_text(ic.g), "[[0,0,0,1],[0,0,1,0],[0,1,0,0],[1,0,0,0]]");
  ASSERT_EQ(ic.e.size(), 4u);
  EXPECT_EQ(ic.e[0], RatFunc(1));
}

TEST(QuadricQh, StructuralInvariants) {
  for (int n = 1; n <= 3; ++n) {
    auto A = qh::qh_mult_matrix(n);
    auto ic = qh::initial_conditions(n);
    EXPECT_EQ(A.dim, static_cast<std::size_t>(2 * n + 2));
    EXPECT_TRUE(qh::is_homogeneous(A)) << n;
    EXPECT_TRUE(qh::minimal_polynomial_divides(A)) << n;
    EXPECT_EQ(ic.U, RatFunc(2 * n + 1) * A.M) << n;
    EXPECT_TRUE(qh::is_self_adjoint(ic.U, ic.g)) << n;
    EXPECT_TRUE(qh::grading_compatible(ic.V, ic.g)) << n;
    EXPECT_EQ(qh::product_text(A, 0), "D1");
  }
}

TEST(QuadricQh, FiveFoldTable) {
  auto A = qh::qh_mult_matrix(2);
  EXPECT_EQ(qh::product_text(A, 2), "2*D3");
  EXPECT_EQ(qh::product_text(A, 4), "D5+q*D0");
  EXPECT_EQ(qh::product_text(A, 5), "q*D1");
}

TEST(QuadricQh, SpectralCover) {
  auto A = qh::qh_mult_matrix(1);
  auto pts = qh::spectral_points();
  ASSERT_EQ(pts.size(), 2u);
  for (const auto& p : pts)
    for (const auto& r : qh::relation_residuals(A, p)) EXPECT_TRUE(r.is_zero()) << p.label;
}

TEST(QuadricQh, NegativeControls) {
  auto A = qh::qh_mult_matrix(1);
  auto bad = A;
  bad.M(1, 0) = RatFunc(2);
  EXPECT_FALSE(qh::is_self_adjoint(bad.M, qh::poincare_pairing(1)));
  bad = A;
  bad.M(0, 2) = RatFunc(1);
  EXPECT_FALSE(qh::is_homogeneous(bad));
}

TEST(QuadricQh, RejectsBadN) {
  EXPECT_THROW(qh::qh_mult_matrix(0), UsageError);
}
