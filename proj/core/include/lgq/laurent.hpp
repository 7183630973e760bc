#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgq/poly.hpp"
#include "lgq/scalar.hpp"
#include "lgq/varset.hpp"

namespace lgq {

using CoeffPoly = Poly<RatFunc>;

/// Multivariate Laurent polynomial in named variables with coefficients in
/// Q(params).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(VarSetPtr vars, VarSetPtr params);
  LaurentPoly(VarSetPtr vars, VarSetPtr params, CoeffPoly poly);

  static LaurentPoly constant(const VarSetPtr& vars, const VarSetPtr& params, const RatFunc& c);
  static LaurentPoly variable(const VarSetPtr& vars, const VarSetPtr& params, std::string_view name,
                              std::int32_t power = 1);
  static LaurentPoly variable(const VarSetPtr& vars, const VarSetPtr& params, std::size_t index,
                              std::int32_t power = 1);
  /// The parameter `name` as a constant polynomial.
  static LaurentPoly param(const VarSetPtr& vars, const VarSetPtr& params, std::string_view name);

  const VarSetPtr& vars() const noexcept { return vars_; }
  const VarSetPtr& params() const noexcept { return params_; }
  const CoeffPoly& poly() const noexcept { return poly_; }
  const std::vector<CoeffPoly::Term>& terms() const noexcept { return poly_.terms(); }
  std::size_t nvars() const noexcept { return poly_.nvars(); }

  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool is_constant() const noexcept { return poly_.is_constant(); }
  bool is_polynomial() const noexcept { return poly_.is_polynomial(); }
  RatFunc constant_term() const { return poly_.constant_term(); }
  RatFunc coefficient(const Monomial& m) const { return poly_.coefficient(m); }

  /// True iff some term has a nonzero exponent in the named variable.
  bool involves(std::string_view name) const;

  LaurentPoly operator-() const { return with(-poly_); }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator*(const RatFunc& c, const LaurentPoly& p) { return p.scale(c); }
  friend LaurentPoly operator*(const LaurentPoly& p, const RatFunc& c) { return p.scale(c); }

  LaurentPoly scale(const RatFunc& c) const { return with(poly_.scale(c)); }
  LaurentPoly mul_monomial(const Monomial& m) const { return with(poly_.mul_term(m, RatFunc(1))); }
  /// Nonnegative powers of any polynomial; negative powers of a single term.
  LaurentPoly pow(int k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Re-expresses the polynomial over `target`, which must contain every
  /// variable that occurs.
  LaurentPoly embed(const VarSetPtr& target) const;

  /// Replaces every coefficient by `f(coefficient)`.
  template <class F>
  LaurentPoly map_coefficients(const VarSetPtr& new_params, F&& f) const {
    return LaurentPoly(vars_, new_params, poly_.map_coefficients(std::forward<F>(f)));
  }

 private:
  LaurentPoly with(CoeffPoly p) const { return LaurentPoly(vars_, params_, std::move(p)); }
  void check_compatible(const LaurentPoly& o) const;

  VarSetPtr vars_;
  VarSetPtr params_;
  CoeffPoly poly_;
};

/// Quotient of two Laurent polynomials. Never simplified automatically;
/// equality is decided by cross-multiplication.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(LaurentPoly num);
  RationalExpr(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  const VarSetPtr& vars() const noexcept { return num_.vars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalExpr operator-() const { return RationalExpr(-num_, den_); }
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

  /// Returns num/den as a Laurent polynomial when den is a single term;
  /// otherwise throws Error.
  LaurentPoly to_laurent() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

using Substitution = std::map<std::string, RationalExpr>;

/// ∂p/∂v.
LaurentPoly partial_derivative(const LaurentPoly& p, std::string_view var);
/// v·∂p/∂v.
LaurentPoly log_derivative(const LaurentPoly& p, std::string_view var);

/// Composes p with the substitution, producing an expression over
/// `target_vars`. Every variable of p must be mapped.
RationalExpr substitute(const LaurentPoly& p, const Substitution& map, const VarSetPtr& target_vars);
RationalExpr substitute(const RationalExpr& e, const Substitution& map, const VarSetPtr& target_vars);

struct ClearedPoly {
  LaurentPoly poly;
  Monomial monomial;
};

/// Smallest monomial m with p·m polynomial, together with p·m.
ClearedPoly clear_denominators(const LaurentPoly& p);

/// Exact value at a point of the cubic extension, one value per variable.
CubicExt eval_at(const LaurentPoly& p, const std::vector<CubicExt>& point);
CubicExt eval_at(const LaurentPoly& p, const std::map<std::string, CubicExt>& point);

}  // namespace lgq
