#pragma once

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "lgq/errors.hpp"
#include "lgq/poly.hpp"
#include "lgq/varset.hpp"

namespace lgq {

/// Exact rational number in lowest terms with positive denominator.
///
/// Only integral and string constructors exist; there is no path from a
/// floating-point value.
class BigRat {
 public:
  BigRat() = default;
  BigRat(int v) : v_(v) {}
  BigRat(long v) : v_(v) {}
  BigRat(long long v) : v_(mpz_class(std::to_string(v))) {}
  BigRat(long num, long den);
  explicit BigRat(const mpz_class& v) : v_(v) {}
  BigRat(const mpz_class& num, const mpz_class& den);
  template <std::floating_point F>
  BigRat(F) = delete;

  /// Parses "a" or "a/b" with optional leading sign.
  static BigRat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  BigRat operator-() const { return from_raw(-v_); }
  BigRat inverse() const;
  BigRat abs() const { return from_raw(::abs(v_)); }

  friend BigRat operator+(const BigRat& a, const BigRat& b) { return from_raw(a.v_ + b.v_); }
  friend BigRat operator-(const BigRat& a, const BigRat& b) { return from_raw(a.v_ - b.v_); }
  friend BigRat operator*(const BigRat& a, const BigRat& b) { return from_raw(a.v_ * b.v_); }
  friend BigRat operator/(const BigRat& a, const BigRat& b);
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }

  std::string to_string() const { return v_.get_str(); }

 private:
  static BigRat from_raw(mpq_class v) {
    BigRat r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

using ParamPoly = Poly<BigRat>;

/// Multivariate polynomial helpers over Q used by the parameter field.
namespace parampoly {

/// Exact quotient a / b; throws Error if b does not divide a.
ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);

/// Quotient and remainder of a by b with respect to b's lex-leading term.
std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b);

/// Greatest common divisor, normalized to lex-leading coefficient 1
/// (gcd(0, 0) = 0).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Value at a rational point (one value per variable).
BigRat evaluate(const ParamPoly& p, const std::vector<BigRat>& point);

/// Substitutes `value` for variable `var`, keeping the variable count.
ParamPoly specialize(const ParamPoly& p, std::size_t var, const BigRat& value);

}  // namespace parampoly

/// Element of Q(params): a quotient of polynomials in the declared
/// parameters. A null parameter set denotes a pure rational constant that
/// promotes into any parameter field.
///
/// Values are kept with numerator and denominator coprime and the
/// denominator's lex-leading coefficient equal to 1. Equality is decided by
/// cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(ParamPoly::constant(0, BigRat(1))) {}
  RatFunc(int v) : RatFunc(BigRat(v)) {}
  RatFunc(long v) : RatFunc(BigRat(v)) {}
  RatFunc(const BigRat& v)
      : num_(ParamPoly::constant(0, v)), den_(ParamPoly::constant(0, BigRat(1))) {}
  template <std::floating_point F>
  RatFunc(F) = delete;

  RatFunc(VarSetPtr params, ParamPoly num, ParamPoly den);
  RatFunc(VarSetPtr params, ParamPoly num);

  /// The parameter with the given index / name as an element of Q(params).
  static RatFunc param(const VarSetPtr& params, std::size_t index);
  static RatFunc param(const VarSetPtr& params, std::string_view name);
  /// A constant viewed in Q(params).
  static RatFunc constant(const VarSetPtr& params, const BigRat& v);

  const VarSetPtr& params() const noexcept { return params_; }
  const ParamPoly& num() const noexcept { return num_; }
  const ParamPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  /// True iff the value does not depend on the parameters.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// The rational value of a constant element; throws if not constant.
  BigRat constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Re-expresses this element over a parameter set that contains every
  /// parameter of the current one.
  RatFunc embed(const VarSetPtr& target) const;

  /// Substitutes a rational value for one parameter. The result keeps the
  /// same parameter set.
  RatFunc specialize(std::size_t param_index, const BigRat& value) const;

 private:
  static VarSetPtr common(const RatFunc& a, const RatFunc& b);
  ParamPoly num_in(std::size_t nvars) const;
  ParamPoly den_in(std::size_t nvars) const;
  void normalize();
  /// Makes the denominator's leading coefficient one (num/den already coprime).
  void scale_denominator();

  VarSetPtr params_;
  ParamPoly num_;
  ParamPoly den_;
};

/// Q(q)(ξ) with ξ³ = 4q, elements c0 + c1·ξ + c2·ξ².
class CubicExt {
 public:
  /// `params` must contain a parameter named "q".
  explicit CubicExt(VarSetPtr params);
  CubicExt(VarSetPtr params, RatFunc c0, RatFunc c1 = RatFunc(), RatFunc c2 = RatFunc());

  static CubicExt xi(const VarSetPtr& params);

  const VarSetPtr& params() const noexcept { return params_; }
  const RatFunc& coeff(std::size_t i) const { return c_.at(i); }

  bool is_zero() const noexcept { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  CubicExt operator-() const;
  CubicExt inverse() const;
  CubicExt pow(int k) const;

  friend CubicExt operator+(const CubicExt& a, const CubicExt& b);
  friend CubicExt operator-(const CubicExt& a, const CubicExt& b);
  friend CubicExt operator*(const CubicExt& a, const CubicExt& b);
  friend CubicExt operator/(const CubicExt& a, const CubicExt& b) { return a * b.inverse(); }
  friend bool operator==(const CubicExt& a, const CubicExt& b);

 private:
  RatFunc four_q() const;

  VarSetPtr params_;
  std::size_t q_index_ = 0;
  std::array<RatFunc, 3> c_;
};

}  // namespace lgq
