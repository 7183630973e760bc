#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgq/groebner.hpp"
#include "lgq/laurent.hpp"
#include "lgq/matrix.hpp"

namespace lgq::gm {

using RMatrix = Matrix<RatFunc>;

/// Σ θ^k [g_k ω0] with ω0 = dlogΔ1∧⋯∧dlogΔ_{2n+1}; keys are θ-degrees.
using BrieskornClass = std::map<int, LaurentPoly>;

/// Σ_j c_j(θ)[ω_j]; coeffs[j][k] is the θ^k coefficient of ω_j.
struct BasisDecomposition {
  std::vector<std::vector<RatFunc>> coeffs;

  explicit BasisDecomposition(std::size_t rank = 0) : coeffs(rank) {}

  std::size_t rank() const noexcept { return coeffs.size(); }
  /// Highest θ-power with a nonzero coefficient, −1 for the zero class.
  int theta_degree() const;
  bool is_zero() const { return theta_degree() < 0; }
  RatFunc coefficient(std::size_t j, int k) const;
  void add(std::size_t j, int k, const RatFunc& c);

  /// Multiplication by θ^k.
  BasisDecomposition shifted(int k) const;

  friend bool operator==(const BasisDecomposition& a, const BasisDecomposition& b);
};

/// Renders e.g. "6*w2+theta*w1"; the zero class prints as "0".
std::string to_string(const BasisDecomposition& d);

struct ConnectionPair {
  RMatrix A0;
  RMatrix Ainf;
};

struct ReductionStats {
  /// Length of the longest certified chain (the θ-degree it reaches).
  int levels = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  /// Some chain needed cofactors with negative exponents.
  bool laurent_support = false;
  /// The solution space fixes every basis coefficient.
  bool coefficients_unique = true;
};

/// Reduction engine for the Brieskorn lattice G0 of the standard potential.
///
/// A class [g·ω0] is written as a finite chain
///   g_0 = g,  g_k = Σ_j c_{kj}Δ_j + Σ_i h_{ki}·L_i,  g_{k+1} = Σ_i Δ_i∂h_{ki}/∂Δ_i,  g_{K+1} = 0
/// with L_i = Δ_i∂f/∂Δ_i, so that [g ω0] = Σ_k θ^k Σ_j c_{kj}[ω_j] by the
/// rule [h·L_i ω0] = θ[Δ_i∂h/∂Δ_i ω0]. All levels are solved together as
/// one linear system, one weight-homogeneous component at a time (Δ_i has
/// weight i, q has weight 2n+1), so the chain found is finite by
/// construction. Every chain is re-checked over Q(q) before it is used.
class Engine {
 public:
  explicit Engine(int n = 1, gb::MonomialOrder order = gb::MonomialOrder::grevlex());

  int n() const noexcept;
  std::size_t rank() const noexcept;
  const VarSetPtr& delta_vars() const noexcept;
  const gb::MonomialOrder& order() const noexcept;
  const LaurentPoly& potential() const noexcept;
  const std::vector<LaurentPoly>& log_forms() const noexcept;
  int default_budget() const noexcept { return 2 * n() + 2; }

  /// Throws ResourceBudgetExceeded when no chain of θ-depth ≤ `budget`
  /// exists within the cofactor search space (negative means 2n+2).
  BasisDecomposition reduce_class(const LaurentPoly& g, int budget = -1, ReductionStats* stats = nullptr) const;
  BasisDecomposition reduce_class(const BrieskornClass& c, int budget = -1, ReductionStats* stats = nullptr) const;

  /// reduce_class(f·Δ_j).
  BasisDecomposition theta2_dtheta(std::size_t j, int budget = -1) const;

  /// Throws NotBirkhoffForm if some θ²∂θ[ω_j] has θ-degree above one.
  ConnectionPair connection_matrices(int budget = -1) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct IdentityCheck {
  std::string name;
  std::string text;
  bool holds = false;
};

/// The four ring identities behind the θ²∂θ computation (n = 1), followed
/// by a perturbed copy of the second one that must fail.
std::vector<IdentityCheck> verify_ring_identities();

struct VFiltrationResult {
  int p = 0;
  RMatrix N;
  bool diagonal_cancels = false;
  bool cube_nonzero = false;
  bool fourth_power_zero = false;
  std::size_t nilpotency_index = 0;  // least k with N^k = 0, 0 if none up to rank+1
};

/// Operator induced by τ∂τ + p on Gr_p in the basis e_i = τ^i[ω_i].
VFiltrationResult v_filtration_gr(const ConnectionPair& c, int p = 0);

/// A Laurent polynomial in τ stored as exponent → coefficient.
using TauPoly = std::map<int, RatFunc>;

struct PairingSolution {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dimension = 0;
  /// A spanning solution when the dimension is one (empty otherwise).
  std::vector<std::vector<TauPoly>> S;
  bool only_antidiagonal = false;
  bool antidiagonal_equal = false;
  bool antidiagonal_tau_minus3 = false;
};

/// Solves the constraints on S_kl(τ) ∈ τ⁻³C[τ⁻¹] ∩ τ^{−(k+l)}C[τ] imposed by
/// flatness under the connection (A0, A∞) and S_kl(τ) = (−1)^3 S_lk(−τ).
PairingSolution solve_pairing_constraints(const ConnectionPair& c, int dim = 3);

std::string to_string(const TauPoly& p);

struct SubspaceCheck {
  int p = 0;
  std::size_t computed_dim = 0;
  bool matches = false;
};

struct CanonicityResult {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::vector<SubspaceCheck>> per_sample;
  bool all_match = false;
};

/// Σ_q conj(F^q) ∩ W_{3+q−p} against span{e_p..e_3} with a random
/// lower-triangular conjugation per sample.
CanonicityResult birkhoff_canonicity_check(std::uint64_t seed = 0, std::size_t samples = 5);

struct MatchResult {
  bool a0_matches = false;
  bool ainf_matches = false;
  std::optional<bool> pairing_matches;
  std::vector<std::string> mismatches;
};

/// A0 = U and −A∞ + (2n+1)/2 = V entrywise; the pairing, when supplied,
/// must be a scalar multiple of the antidiagonal Poincaré pairing.
MatchResult initial_conditions_match(const ConnectionPair& c, int n = 1, const PairingSolution* pairing = nullptr);

}  // namespace lgq::gm
