#include "lgq/laurent.hpp"

#include <algorithm>

namespace lgq {

namespace {

VarSetPtr merge_params(const VarSetPtr& a, const VarSetPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!same_varset(a, b)) throw ParamSetMismatch("polynomials over different parameter sets");
  return a;
}

std::size_t var_count(const VarSetPtr& vars) { return vars ? vars->size() : 0; }

}  // namespace

LaurentPoly::LaurentPoly(VarSetPtr vars, VarSetPtr params)
    : vars_(std::move(vars)), params_(std::move(params)), poly_(var_count(vars_)) {}

LaurentPoly::LaurentPoly(VarSetPtr vars, VarSetPtr params, CoeffPoly poly)
    : vars_(std::move(vars)), params_(std::move(params)), poly_(std::move(poly)) {
  if (poly_.nvars() != var_count(vars_)) {
    if (!poly_.is_zero()) throw VarSetMismatch("polynomial arity does not match its variable set");
    poly_ = CoeffPoly(var_count(vars_));
  }
}

LaurentPoly LaurentPoly::constant(const VarSetPtr& vars, const VarSetPtr& params, const RatFunc& c) {
  return LaurentPoly(vars, params, CoeffPoly::constant(var_count(vars), c));
}

LaurentPoly LaurentPoly::variable(const VarSetPtr& vars, const VarSetPtr& params, std::string_view name,
                                  std::int32_t power) {
  if (!vars) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return variable(vars, params, vars->index_of(name), power);
}

LaurentPoly LaurentPoly::variable(const VarSetPtr& vars, const VarSetPtr& params, std::size_t index,
                                  std::int32_t power) {
  if (index >= var_count(vars)) throw UnknownVariable("variable index out of range");
  return LaurentPoly(vars, params, CoeffPoly::variable(vars->size(), index, power));
}

LaurentPoly LaurentPoly::param(const VarSetPtr& vars, const VarSetPtr& params, std::string_view name) {
  return constant(vars, params, RatFunc::param(params, name));
}

bool LaurentPoly::involves(std::string_view name) const {
  if (!vars_) return false;
  auto i = vars_->find(name);
  return i && poly_.involves(*i);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (!same_varset(vars_, o.vars_)) throw VarSetMismatch("polynomials over different variable sets");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  return LaurentPoly(a.vars_, merge_params(a.params_, b.params_), a.poly_ + b.poly_);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  return LaurentPoly(a.vars_, merge_params(a.params_, b.params_), a.poly_ - b.poly_);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  return LaurentPoly(a.vars_, merge_params(a.params_, b.params_), a.poly_ * b.poly_);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  return a.poly_ == b.poly_;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k >= 0) return with(poly_.pow(static_cast<unsigned>(k)));
  if (poly_.size() != 1) throw Error("negative power of a non-monomial Laurent polynomial");
  const auto& [m, c] = poly_.terms().front();
  return with(CoeffPoly::term(m.pow(k), c.pow(k)));
}

LaurentPoly LaurentPoly::embed(const VarSetPtr& target) const {
  if (same_varset(vars_, target)) return LaurentPoly(target, params_, poly_);
  const std::size_t n = var_count(target);
  std::vector<CoeffPoly::Term> out;
  out.reserve(poly_.size());
  std::vector<std::ptrdiff_t> map(var_count(vars_), -1);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!poly_.involves(i)) continue;
    auto j = target ? target->find(vars_->name(i)) : std::nullopt;
    if (!j) throw VarSetMismatch("variable '" + vars_->name(i) + "' missing from target set");
    map[i] = static_cast<std::ptrdiff_t>(*j);
  }
  for (const auto& [m, c] : poly_.terms()) {
    Monomial nm(n);
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] >= 0) nm[static_cast<std::size_t>(map[i])] = m[i];
    out.emplace_back(nm, c);
  }
  return LaurentPoly(target, params_, CoeffPoly::from_terms(n, std::move(out)));
}

// ---------------------------------------------------------------------------
// RationalExpr

RationalExpr::RationalExpr(LaurentPoly num)
    : num_(num), den_(LaurentPoly::constant(num.vars(), num.params(), RatFunc(1))) {}

RationalExpr::RationalExpr(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_varset(num_.vars(), den_.vars())) throw VarSetMismatch("numerator and denominator variable sets differ");
  if (den_.is_zero()) throw ZeroDenominator("zero denominator");
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num_.is_zero()) throw ZeroDenominator("division by a zero expression");
  return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalExpr& a, const RationalExpr& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

LaurentPoly RationalExpr::to_laurent() const {
  if (den_.terms().size() != 1) throw Error("denominator is not a monomial");
  return num_ * den_.pow(-1);
}

// ---------------------------------------------------------------------------
// Calculus and substitution

LaurentPoly partial_derivative(const LaurentPoly& p, std::string_view var) {
  if (!p.vars()) throw UnknownVariable("unknown variable '" + std::string(var) + "'");
  return LaurentPoly(p.vars(), p.params(), p.poly().derivative(p.vars()->index_of(var)));
}

LaurentPoly log_derivative(const LaurentPoly& p, std::string_view var) {
  if (!p.vars()) throw UnknownVariable("unknown variable '" + std::string(var) + "'");
  return LaurentPoly(p.vars(), p.params(), p.poly().log_derivative(p.vars()->index_of(var)));
}

RationalExpr substitute(const LaurentPoly& p, const Substitution& map, const VarSetPtr& target_vars) {
  const std::size_t n = p.nvars();
  VarSetPtr params = p.params();
  for (const auto& [name, e] : map) {
    params = merge_params(params, e.num().params());
    params = merge_params(params, e.den().params());
  }
  const LaurentPoly one = LaurentPoly::constant(target_vars, params, RatFunc(1));

  std::vector<std::int32_t> pos(n, 0), neg(n, 0);
  std::vector<std::vector<LaurentPoly>> num_pow(n), den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.poly().involves(i)) continue;
    auto it = map.find(p.vars()->name(i));
    if (it == map.end()) throw UnknownVariable("no substitution for '" + p.vars()->name(i) + "'");
    const RationalExpr& e = it->second;
    if (!same_varset(e.vars(), target_vars)) throw VarSetMismatch("substitution value over the wrong variables");
    pos[i] = std::max(0, p.poly().max_degree(i));
    neg[i] = std::max(0, -p.poly().min_degree(i));
    if (neg[i] > 0 && e.num().is_zero()) throw ZeroDenominator("negative power of a zero substitution");
    const std::size_t top = static_cast<std::size_t>(pos[i] + neg[i]);
    num_pow[i].push_back(one);
    den_pow[i].push_back(one);
    for (std::size_t k = 1; k <= top; ++k) {
      num_pow[i].push_back(num_pow[i].back() * e.num());
      den_pow[i].push_back(den_pow[i].back() * e.den());
    }
  }

  LaurentPoly num(target_vars, params);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(target_vars, params, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (num_pow[i].empty()) continue;
      t *= num_pow[i][static_cast<std::size_t>(neg[i] + m[i])];
      t *= den_pow[i][static_cast<std::size_t>(pos[i] - m[i])];
    }
    num += t;
  }
  LaurentPoly den = one;
  for (std::size_t i = 0; i < n; ++i) {
    if (num_pow[i].empty()) continue;
    den *= den_pow[i][static_cast<std::size_t>(pos[i])];
    den *= num_pow[i][static_cast<std::size_t>(neg[i])];
  }
  return RationalExpr(num, den);
}

RationalExpr substitute(const RationalExpr& e, const Substitution& map, const VarSetPtr& target_vars) {
  RationalExpr d = substitute(e.den(), map, target_vars);
  if (d.is_zero()) throw ZeroDenominator("denominator vanishes after substitution");
  return substitute(e.num(), map, target_vars) / d;
}

ClearedPoly clear_denominators(const LaurentPoly& p) {
  Monomial m(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) m[i] = std::max(0, -p.poly().min_degree(i));
  return {p.mul_monomial(m), m};
}

CubicExt eval_at(const LaurentPoly& p, const std::vector<CubicExt>& point) {
  if (point.size() != p.nvars()) throw VarSetMismatch("point dimension does not match variable count");
  if (point.empty()) throw Error("cannot evaluate without a base field");
  const VarSetPtr& base = point.front().params();
  CubicExt acc(base);
  std::vector<std::map<std::int32_t, CubicExt>> cache(point.size());
  auto power = [&](std::size_t i, std::int32_t e) -> const CubicExt& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    if (e < 0 && point[i].is_zero())
      throw PoleAtPoint("variable '" + p.vars()->name(i) + "' vanishes at a pole");
    return cache[i].emplace(e, point[i].pow(e)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    CubicExt t(base, c);
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    acc = acc + t;
  }
  return acc;
}

CubicExt eval_at(const LaurentPoly& p, const std::map<std::string, CubicExt>& point) {
  std::vector<CubicExt> pt;
  pt.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = point.find(p.vars()->name(i));
    if (it == point.end()) throw UnknownVariable("no value for '" + p.vars()->name(i) + "'");
    pt.push_back(it->second);
  }
  return eval_at(p, pt);
}

}  // namespace lgq
