#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lgq/groebner.hpp"
#include "lgq/laurent.hpp"

namespace lgq::tame {

/// x0, x1, y0, y1, z0, z1, t over Q(q).
const VarSetPtr& homogeneous_vars();

struct HomogSurface {
  LaurentPoly equation;
  /// Degree in each pair (x0:x1), (y0:y1), (z0:z1); −1 where not homogeneous.
  std::array<int, 3> bidegree{-1, -1, -1};
};

/// Degree of p in the pair (v0, v1) when every term has the same one.
std::optional<int> pair_degree(const LaurentPoly& p, const std::string& v0, const std::string& v1);

/// x0·z1·(x1y1 − x0y0)·[y1(z1+z0) − t·y0z0] + q·z0²x1²y0², or the bracket
/// without its t-term when `drop_t` is set.
HomogSurface homogeneous_equation(bool drop_t = false);

struct ClosureCheck {
  HomogSurface surface;
  LaurentPoly affine;             // restriction to V000
  bool restriction_matches = false;  // equals z(xy−1)[y(1+z) − t] + qx²
  bool graph_relation = false;       // affine = −(t − g)·(xy−1)·z
  bool shift_identity = false;       // f̃(x, y, z − 1) = g(x, y, z)
  bool scaling_degree = false;       // P(λx0, λx1, …) = λ²P
};

ClosureCheck graph_closure_equation();

/// y(1+z) + q·x²/((xy−1)·z) in the V000 coordinates.
RationalExpr g_potential();

/// Chart V_ijk where x_i, y_j, z_k do not vanish. Its coordinates are the
/// three ratios (named x or xp, y or yp, z or zp, the p marking a ratio
/// with index 0 on top) and t.
struct Chart {
  int i = 0, j = 0, k = 0;
  VarSetPtr vars;

  std::string label() const;  // e.g. "V010"
  /// Coordinates whose vanishing is the boundary x0·y0·z0 = 0.
  std::vector<std::string> boundary_vars() const;
  std::vector<std::string> spatial_vars() const;
};

Chart make_chart(int i, int j, int k);
/// From "ijk" or "Vijk"; throws UsageError otherwise.
Chart parse_chart(const std::string& text);
std::vector<Chart> all_charts();

LaurentPoly dehomogenize(const LaurentPoly& homogeneous, const Chart& c);
LaurentPoly chart_equation(const Chart& c);

struct SingularLocus {
  std::string chart;
  std::vector<std::string> boundary;  // coordinates set to zero
  bool with_t_derivative = true;
  bool empty = false;
  std::vector<LaurentPoly> generators;  // reduced Gröbner basis
  std::string expected;                 // description of the published locus, if any
  std::optional<bool> matches_expected;
};

/// {P, P_x, P_y, P_z, P_t} plus the listed boundary coordinates, with t a
/// ring variable.
SingularLocus chart_singular_locus(const Chart& c, const std::vector<std::string>& boundary,
                                   bool with_t_derivative = true, const gb::Options& opts = {});

/// Every chart with every nonempty set of boundary coordinates, plus the
/// whole of V000 (which misses the boundary).
std::vector<SingularLocus> singular_survey(const gb::Options& opts = {});

struct JacobianCheck {
  LaurentPoly determinant;
  /// 1 ∈ (locus) + (J): J has no zero on the locus.
  bool nonvanishing = false;
};

/// det ∂(new_coords)/∂(spatial coordinates).
JacobianCheck jacobian_of_change(const Chart& c, const std::vector<LaurentPoly>& new_coords,
                                 const std::vector<LaurentPoly>& locus, const gb::Options& opts = {});

struct RewriteCheck {
  std::string chart;
  std::vector<LaurentPoly> new_coords;
  RationalExpr normal_form;  // in x1, y1, z1
  JacobianCheck jacobian;
  bool identity_holds = false;
  bool t_free = false;
};

/// Charts V000, V010 and V110; UsageError for the others.
RewriteCheck rewritten_equation_check(const Chart& c, const gb::Options& opts = {});

struct FiberTotalCheck {
  std::string chart;
  std::vector<std::string> boundary;
  bool equal = false;
};

FiberTotalCheck fiber_vs_total_boundary(const Chart& c, const std::vector<std::string>& boundary,
                                        const gb::Options& opts = {});

struct PairJacobian {
  int a = 0, b = 0;  // factor indices 1..4
  BigRat at_origin;
};

struct MuCheck {
  std::vector<BigRat> ts;
  std::vector<std::size_t> mu;
  std::size_t mu_symbolic = 0;
  bool constant = false;
  /// Staircases coincide with the symbolic one at every sample t where the
  /// symbolic local basis has no pole.
  bool staircases_specialize = false;
  /// Samples where some coefficient of the symbolic basis has a pole.
  std::vector<BigRat> pole_ts;
  bool factorization_x = false;  // P̃_x' = f1·f2
  bool factorization_y = false;  // P̃_y = f3·f4
  std::vector<PairJacobian> pairs;
};

/// P = x'(y − x')[y(1+z') − t·z'] + q·z'² in chart V101.
MuCheck mu_constancy_V101(const std::vector<BigRat>& sample_ts, const gb::Options& opts = {});

struct ZCheck {
  bool ideals_equal = false;
  bool reduced_t_free = false;
  /// Without x0·y0·z0 the two equations generate different ideals.
  bool control_differs = false;
};

ZCheck z_is_product_check(const gb::Options& opts = {});

struct CompatibilityCheck {
  std::size_t pairs = 0;
  std::size_t agreeing = 0;
  std::vector<std::string> failures;
};

/// For each of the 28 pairs of charts, the equations agree on the overlap
/// after the monomial transition and clearing the squared ratios.
CompatibilityCheck chart_compatibility();

}  // namespace lgq::tame
