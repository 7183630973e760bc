#include <gtest/gtest.h>

#include "lgq/generators.hpp"
#include "lgq/laurent.hpp"
#include "lgq/properties.hpp"

using namespace lgq;

namespace {

void expect_ok(const props::Outcome& o) {
  EXPECT_TRUE(o.ok()) << o.name << ": " << o.failures << "/" << o.cases << " failed; first: " << o.first_failure;
}

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

}  // namespace

TEST_P(Seeded, GroebnerOrderInvariance) { expect_ok(props::groebner_order_invariance(GetParam(), 40)); }
TEST_P(Seeded, NormalFormIdempotence) { expect_ok(props::normal_form_idempotence(GetParam(), 60)); }
TEST_P(Seeded, SPolynomialsReduceToZero) { expect_ok(props::s_polynomials_reduce_to_zero(GetParam(), 40)); }
TEST_P(Seeded, LeibnizRule) { expect_ok(props::leibniz_rule(GetParam(), 100)); }
TEST_P(Seeded, SubstitutionIsARingMorphism) { expect_ok(props::substitution_morphism(GetParam(), 100)); }
TEST_P(Seeded, TextRoundTrip) { expect_ok(props::polytext_round_trip(GetParam(), 200)); }
TEST_P(Seeded, ReductionOrderIndependence) { expect_ok(props::reduction_order_independence(GetParam(), 25)); }
TEST_P(Seeded, ReductionConsistency) { expect_ok(props::reduction_consistency(GetParam(), 25)); }

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1u, 7u, 2024u, 0xdecafu));

TEST(Properties, SuiteCoversAThousandCases) {
  std::size_t cases = 0;
  for (const auto& o : props::run_suite(99)) {
    expect_ok(o);
    cases += o.cases;
  }
  EXPECT_EQ(cases, 1000u);
}

TEST(Generators, Deterministic) {
  auto v = make_varset({"x", "y"});
  auto p = make_varset({"q"});
  gen::Rng a(5), b(5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(gen::laurent(a, v, p, 4, -2, 3), gen::laurent(b, v, p, 4, -2, 3));
}

TEST(Generators, PolynomialsHaveNoPoles) {
  auto v = make_varset({"x", "y", "z"});
  auto p = make_varset({"q"});
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = gen::polynomial(rng, v, p, 5, 3);
    for (const auto& [m, c] : g.terms())
      for (std::size_t k = 0; k < m.size(); ++k) EXPECT_GE(m[k], 0);
  }
}

TEST(Generators, RationalBounds) {
  gen::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto r = gen::nonzero_rat(rng, 4, 3);
    EXPECT_FALSE(r.is_zero());
    EXPECT_LE(r.abs().num(), 4);
    EXPECT_LE(r.den(), 3);
  }
}
