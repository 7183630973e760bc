#pragma once

#include <string>
#include <string_view>

#include "lgq/laurent.hpp"
#include "lgq/scalar.hpp"

namespace lgq {

/// Text rendering in the polynomial grammar: no spaces, `*` between factors,
/// `^` for exponents (negative allowed), parameter-dependent coefficients in
/// parentheses, e.g. `(q^2+1)/(2*q)*x^2-D1^-1`.
std::string to_string(const BigRat& v);
std::string to_string(const ParamPoly& p, const VarSetPtr& params);
std::string to_string(const RatFunc& v);
std::string to_string(const LaurentPoly& p);
std::string to_string(const RationalExpr& e);
/// Rendered as a polynomial in the symbol `xi`.
std::string to_string(const CubicExt& v);

/// Parses an element of Q(params). Throws ParseError.
RatFunc parse_scalar(std::string_view text, const VarSetPtr& params);
/// Parses a Laurent polynomial; division is allowed only by single terms.
LaurentPoly parse_laurent(std::string_view text, const VarSetPtr& vars, const VarSetPtr& params);
/// Parses a quotient of Laurent polynomials.
RationalExpr parse_rational(std::string_view text, const VarSetPtr& vars, const VarSetPtr& params);

}  // namespace lgq
