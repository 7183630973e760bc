#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgq/laurent.hpp"

namespace lgq::gb {

enum class OrderKind { GRevLex, Lex, Block };

/// Monomial order on exponent vectors. `Block(k)` compares the first k
/// variables by graded reverse lex and breaks ties by graded reverse lex on
/// the remaining ones, so it eliminates the first k variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::GRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {OrderKind::Block, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Finitely many nonzero polynomials (nonnegative exponents) over Q(params).
class PolyIdeal {
 public:
  PolyIdeal(VarSetPtr vars, VarSetPtr params, std::vector<LaurentPoly> generators,
            MonomialOrder order = MonomialOrder::grevlex());

  const VarSetPtr& vars() const noexcept { return vars_; }
  const VarSetPtr& params() const noexcept { return params_; }
  const std::vector<LaurentPoly>& generators() const noexcept { return gens_; }
  const MonomialOrder& order() const noexcept { return order_; }

  PolyIdeal with_order(MonomialOrder order) const { return PolyIdeal(vars_, params_, gens_, order); }
  PolyIdeal with_generators(std::vector<LaurentPoly> gens) const { return PolyIdeal(vars_, params_, std::move(gens), order_); }
  PolyIdeal plus(const std::vector<LaurentPoly>& extra) const;

 private:
  VarSetPtr vars_;
  VarSetPtr params_;
  std::vector<LaurentPoly> gens_;
  MonomialOrder order_;
};

struct Options {
  /// Maximal number of critical pairs processed before giving up.
  std::size_t max_pairs = 200000;
  /// Record how each basis element is built from the input generators.
  bool track_cofactors = false;
};

struct Stats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t reductions = 0;
};

struct Impl;

/// Reduced Gröbner basis (monic, auto-reduced, sorted by increasing leading
/// monomial).
class GroebnerBasis {
 public:
  const VarSetPtr& vars() const noexcept;
  const VarSetPtr& params() const noexcept;
  const MonomialOrder& order() const noexcept;
  const std::vector<LaurentPoly>& basis() const noexcept;
  std::vector<Monomial> leading_monomials() const;
  const Stats& stats() const noexcept;
  bool is_unit() const;
  bool tracks_cofactors() const noexcept;

  LaurentPoly normal_form(const LaurentPoly& p) const;
  bool contains(const LaurentPoly& p) const { return normal_form(p).is_zero(); }

  /// Cofactors h with p = Σ h_i·g_i over the original generators g_i.
  /// Requires cofactor tracking; throws Error if p is not in the ideal.
  std::vector<LaurentPoly> lift(const LaurentPoly& p) const;

  /// Number of standard monomials, or nullopt when infinite.
  std::optional<std::size_t> quotient_dimension() const;
  /// Standard monomials in increasing order; throws Error when infinite.
  std::vector<Monomial> staircase() const;

  /// Normal forms of every pairwise S-polynomial (all zero for a valid basis).
  std::vector<LaurentPoly> s_polynomial_remainders() const;

 private:
  friend GroebnerBasis buchberger(const PolyIdeal&, const Options&);
  std::shared_ptr<const Impl> impl_;
};

GroebnerBasis buchberger(const PolyIdeal& ideal, const Options& options = {});

LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb);
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb);

/// I : h^∞ via an auxiliary variable w, w·h − 1 and block elimination.
PolyIdeal saturate(const PolyIdeal& ideal, const LaurentPoly& h, const Options& options = {});

/// Generators of I ∩ k[remaining variables] (same variable set, the
/// eliminated variables simply do not occur).
PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<std::string>& vars, const Options& options = {});

/// Gröbner basis (graded reverse lex) of I + m^k, m the maximal ideal at
/// the origin. Terms of degree ≥ k are dropped from the generators first.
GroebnerBasis local_basis(const PolyIdeal& ideal, std::size_t k, const Options& options = {});

/// dim k[vars]/(I + m^k) at the first k where two consecutive values agree.
std::size_t local_dimension_at_origin(const PolyIdeal& ideal, std::size_t k_max, const Options& options = {});

/// True iff both ideals have the same elements.
bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b, const Options& options = {});

/// True iff p vanishes on V(I) (p lies in the radical of I).
bool radical_contains(const PolyIdeal& ideal, const LaurentPoly& p, const Options& options = {});

/// True iff V(a) = V(b) as sets over the algebraic closure.
bool same_zero_set(const PolyIdeal& a, const PolyIdeal& b, const Options& options = {});

}  // namespace lgq::gb
