#pragma once

#include <string>
#include <vector>

#include "lgq/matrix.hpp"
#include "lgq/scalar.hpp"

namespace lgq::qh {

using RMatrix = Matrix<RatFunc>;

/// The parameter set {q} shared by every computation over Q(q).
const VarSetPtr& q_params();

/// Small quantum cohomology of the odd quadric Q_{2n+1}: basis Δ0..Δ_{2n+1}
/// and the matrix M of multiplication by Δ1 (column j holds Δ1∘Δj).
struct QhAlgebra {
  int n = 1;
  std::size_t dim = 4;
  RMatrix M;

  /// Internal degree of basis element i (2i) and of q (2(2n+1)).
  int basis_degree(std::size_t i) const { return 2 * static_cast<int>(i); }
  int q_degree() const { return 2 * (2 * n + 1); }
};

struct InitialConditions {
  RMatrix U;
  RMatrix V;
  RMatrix g;
  std::vector<RatFunc> e;
};

QhAlgebra qh_mult_matrix(int n);
InitialConditions initial_conditions(int n);
RMatrix poincare_pairing(int n);

/// A point of the spectral cover, coordinates (Δ0, ..., Δ_{2n+1}).
struct SpectralPoint {
  std::string label;
  std::vector<CubicExt> coords;
};

/// P0 = (1, 0, 0, −q) and the generic point P_i = (1, ξ, ξ²/2, q), ξ³ = 4q.
std::vector<SpectralPoint> spectral_points();

/// Residuals Δ1·Δj − Σ_i M[i][j]·Δi at the point (all zero on the cover).
std::vector<CubicExt> relation_residuals(const QhAlgebra& A, const SpectralPoint& p);

/// Every nonzero entry M[i][j] is c·q^k with deg Δi + k·deg q = deg Δj + 2.
bool is_homogeneous(const QhAlgebra& A);
/// gᵀM = Mᵀg.
bool is_self_adjoint(const RMatrix& M, const RMatrix& g);
/// Vᵀg + gV = 0.
bool grading_compatible(const RMatrix& V, const RMatrix& g);
/// M·(M^{2n+1} − 4q) = 0, i.e. the minimal polynomial divides λ(λ^{2n+1} − 4q).
bool minimal_polynomial_divides(const QhAlgebra& A);

/// Renders Δ1∘Δj as text, e.g. "D3+q*D0".
std::string product_text(const QhAlgebra& A, std::size_t j);

}  // namespace lgq::qh
