#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgq/groebner.hpp"
#include "lgq/laurent.hpp"
#include "lgq/quadric_qh.hpp"

namespace lgq::lg {

/// Torus coordinates D1..D_{2n+1}.
VarSetPtr delta_vars(int n);
/// Y1..Y_{2n+1}.
VarSetPtr y_vars(int n);
/// Compactified coordinates: x, y, z for n = 1; x, y1..yn, z1..zn otherwise.
VarSetPtr compact_vars(int n);

struct TorusPotential {
  int n = 1;
  VarSetPtr vars;
  LaurentPoly f;
  /// Summands T1 = D1, T_i = c_i·D_i/D_{i−1} (i ≤ 2n), and the last one
  /// (D_{2n+1}+q)²/(2·D_{2n}·D_{2n+1}).
  std::vector<LaurentPoly> terms;
};

TorusPotential build_standard_potential(int n);

/// Σ_{i ≤ 2n} Y_i + (Y_{2n+1}+q)²/(Y1⋯Y_{2n+1}).
RationalExpr potential_in_y(int n);

/// D_i·∂f/∂D_i for i = 1..2n+1.
std::vector<LaurentPoly> log_derivatives(const TorusPotential& f);

/// The relations T_i = T_{i+1} rearranged from the multiplication table:
/// L_i = T_i − T_{i+1} for i < 2n, L_{2n} = T_{2n} − T_last and
/// L_{2n+1} = (D_{2n+1}² − q²)/(2·D_{2n}·D_{2n+1}).
std::vector<LaurentPoly> table_log_forms(int n);

/// The torus relations D1·Dj − (table right-hand side with D0 = 1).
std::vector<LaurentPoly> table_relations(const qh::QhAlgebra& A);

struct IntegrationResult {
  std::vector<bool> line_holds;
  bool ideals_equal = false;
  std::optional<std::size_t> log_ideal_degree;
  std::optional<std::size_t> table_ideal_degree;
  /// The uncorrected second line for n = 1, D2/D1 = (D3+q)²/(2·D2·D3),
  /// evaluated at the generic spectral point (true iff it holds there).
  std::optional<bool> printed_line2_holds;
};

IntegrationResult integrates_table(const TorusPotential& f, const qh::QhAlgebra& A, const gb::Options& opts = {});

struct CompactifiedPotential {
  int n = 1;
  VarSetPtr vars;
  /// The stored closed form.
  RationalExpr f;
  /// (x·Πy − 1)·Π(1 + z_k).
  LaurentPoly boundary;
  /// D_i as polynomials in the compact coordinates.
  Substitution delta_of;
  /// Y_i as polynomials in the compact coordinates.
  Substitution y_of;
  /// Compact coordinates as Laurent polynomials in D.
  Substitution compact_of;

  bool identity_holds = false;          // f ∘ delta_of = closed form
  bool y_identity_holds = false;        // f_Y ∘ y_of = closed form
  bool inverse_identity_holds = false;  // both compositions are the identity
};

CompactifiedPotential compactify(const TorusPotential& f);

/// Closed form Σ y_k(2+z_k) + q·x²/((x·Πy − 1)·Π(1+z_k)).
RationalExpr compactified_closed_form(int n);

struct CriticalScheme {
  gb::PolyIdeal ideal;
  LaurentPoly divisor;
  gb::GroebnerBasis basis;
  std::optional<std::size_t> degree;
};

CriticalScheme critical_scheme(const CompactifiedPotential& p, const gb::Options& opts = {});
CriticalScheme critical_scheme(const TorusPotential& p, const gb::Options& opts = {});

/// Numerators of ∂f/∂v for a rational function f = N/D: N_v·D − N·D_v.
std::vector<LaurentPoly> partial_numerators(const RationalExpr& f);

struct PointEvaluation {
  std::string label;
  std::vector<CubicExt> point;
  std::vector<CubicExt> partials;
  bool vanishes = false;
};

struct CriticalPointsResult {
  std::vector<PointEvaluation> points;  // P0 and P_i
  PointEvaluation probe;                // (1, 2, 1)
  bool distinct = false;
};

CriticalPointsResult verify_critical_points();

struct MilnorBasisResult {
  std::vector<std::string> staircase;
  Matrix<RatFunc> coordinates;       // normal forms of 1, D1, D2, D3
  std::size_t rank = 0;
  std::size_t rank_shifted = 0;      // D3 replaced by q + D3
  std::size_t rank_replaced = 0;     // D2 replaced by D1²/2
};

MilnorBasisResult milnor_ring_basis_check(const gb::Options& opts = {});

/// Coordinates of NF(p) in the staircase basis of gb.
std::vector<RatFunc> staircase_coordinates(const gb::GroebnerBasis& g, const std::vector<Monomial>& stairs,
                                           const LaurentPoly& p);

}  // namespace lgq::lg
