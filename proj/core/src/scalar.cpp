#include "lgq/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace lgq {

// ---------------------------------------------------------------------------
// BigRat

BigRat::BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t j = digits(i);
  if (j == i) throw ParseError("malformed rational '" + s + "'");
  const std::size_t start = s[0] == '+' ? 1 : 0;
  mpz_class num(s.substr(start, j - start));
  if (j == s.size()) return BigRat(num);
  if (s[j] != '/') throw ParseError("malformed rational '" + s + "'");
  std::size_t k = digits(j + 1);
  if (k == j + 1 || k != s.size()) throw ParseError("malformed rational '" + s + "'");
  mpz_class den(s.substr(j + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return BigRat(num, den);
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_raw(1 / v_);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
  if (b.is_zero()) throw DivisionByZero();
  return BigRat::from_raw(a.v_ / b.v_);
}

// ---------------------------------------------------------------------------
// Polynomials over Q

namespace parampoly {
namespace {

using Term = ParamPoly::Term;

ParamPoly make_monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  const BigRat& lc = p.lex_leading().second;
  if (lc.is_one()) return p;
  return p.scale(lc.inverse());
}

std::ptrdiff_t first_var(const ParamPoly& a, const ParamPoly& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.involves(v) || b.involves(v)) return static_cast<std::ptrdiff_t>(v);
  return -1;
}

/// Coefficients of p viewed as a polynomial in `var`.
std::vector<ParamPoly> coefficients(const ParamPoly& p, std::size_t var) {
  std::int32_t d = p.max_degree(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    r[var] = 0;
    buckets[static_cast<std::size_t>(m[var])].emplace_back(r, c);
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(ParamPoly::from_terms(p.nvars(), std::move(b)));
  return out;
}

/// p scaled to integer coefficients with gcd one and a positive lex-leading
/// coefficient.
ParamPoly integer_primitive(const ParamPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    mpz_class v = c.raw().get_num() * (l / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (p.lex_leading().second.sign() < 0) g = -g;
  return p.scale(BigRat(l, g));
}

ParamPoly leading_coeff(const ParamPoly& p, std::size_t var) { return coefficients(p, var).back(); }

ParamPoly content(const ParamPoly& p, std::size_t var) {
  ParamPoly g(p.nvars());
  for (const auto& c : coefficients(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& p, std::size_t var) {
  return integer_primitive(exact_div(p, content(p, var)));
}

ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, std::size_t var) {
  const std::int32_t db = b.max_degree(var);
  const ParamPoly lb = leading_coeff(b, var);
  while (!a.is_zero() && a.max_degree(var) >= db) {
    std::int32_t da = a.max_degree(var);
    ParamPoly la = leading_coeff(a, var);
    a = integer_primitive(a * lb - la * b.mul_term(Monomial::var(a.nvars(), var, da - db), BigRat(1)));
  }
  return a;
}

}  // namespace

std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const auto& [lm, lc] = b.lex_leading();
  std::vector<Term> quot, rem;
  ParamPoly r = a;
  while (!r.is_zero()) {
    const auto& [m, c] = r.lex_leading();
    if (lm.divides(m)) {
      Monomial qm = m / lm;
      BigRat qc = c / lc;
      quot.emplace_back(qm, qc);
      r = r - b.mul_term(qm, qc);
    } else {
      Term t = r.lex_leading();
      rem.push_back(t);
      r = r - ParamPoly::term(t.first, t.second);
    }
  }
  return {ParamPoly::from_terms(a.nvars(), std::move(quot)), ParamPoly::from_terms(a.nvars(), std::move(rem))};
}

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly::constant(n, BigRat(1));
  if (a.size() == 1 || b.size() == 1) {
    const ParamPoly& mono = a.size() == 1 ? a : b;
    const ParamPoly& other = a.size() == 1 ? b : a;
    Monomial m = mono.terms().front().first;
    for (const auto& [e, c] : other.terms())
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
    return ParamPoly::term(m, BigRat(1));
  }
  if (a == b) return make_monic(a);

  const auto v = static_cast<std::size_t>(first_var(a, b));
  if (!a.involves(v)) return gcd(a, content(b, v));
  if (!b.involves(v)) return gcd(content(a, v), b);

  ParamPoly c = gcd(content(a, v), content(b, v));
  ParamPoly p = primitive_part(a, v);
  ParamPoly r = primitive_part(b, v);
  if (p.max_degree(v) < r.max_degree(v)) std::swap(p, r);
  ParamPoly g;
  for (;;) {
    ParamPoly rem = pseudo_remainder(p, r, v);
    if (rem.is_zero()) {
      g = r;
      break;
    }
    if (!rem.involves(v)) {
      g = ParamPoly::constant(n, BigRat(1));
      break;
    }
    p = std::move(r);
    r = primitive_part(rem, v);
  }
  return make_monic(c * g);
}

BigRat evaluate(const ParamPoly& p, const std::vector<BigRat>& point) {
  BigRat acc;
  for (const auto& [m, c] : p.terms()) {
    BigRat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::int32_t k = 0; k < m[i]; ++k) t *= point.at(i);
    acc += t;
  }
  return acc;
}

ParamPoly specialize(const ParamPoly& p, std::size_t var, const BigRat& value) {
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) {
    BigRat t = c;
    for (std::int32_t k = 0; k < m[var]; ++k) t *= value;
    Monomial r = m;
    r[var] = 0;
    out.emplace_back(r, t);
  }
  return ParamPoly::from_terms(p.nvars(), std::move(out));
}

}  // namespace parampoly

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(VarSetPtr params, ParamPoly num, ParamPoly den)
    : params_(std::move(params)), num_(std::move(num)), den_(std::move(den)) {
  const std::size_t n = params_ ? params_->size() : 0;
  if (num_.nvars() != n) num_ = num_in(n);
  if (den_.nvars() != n) den_ = den_in(n);
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

RatFunc::RatFunc(VarSetPtr params, ParamPoly num)
    : RatFunc(params, std::move(num), ParamPoly::constant(params ? params->size() : 0, BigRat(1))) {}

RatFunc RatFunc::param(const VarSetPtr& params, std::size_t index) {
  if (!params || index >= params->size()) throw UnknownVariable("unknown parameter index");
  return RatFunc(params, ParamPoly::variable(params->size(), index));
}

RatFunc RatFunc::param(const VarSetPtr& params, std::string_view name) {
  if (!params) throw UnknownVariable("unknown parameter '" + std::string(name) + "'");
  return param(params, params->index_of(name));
}

RatFunc RatFunc::constant(const VarSetPtr& params, const BigRat& v) {
  const std::size_t n = params ? params->size() : 0;
  return RatFunc(params, ParamPoly::constant(n, v));
}

bool RatFunc::is_one() const { return is_constant() && constant_value().is_one(); }

BigRat RatFunc::constant_value() const {
  if (!is_constant()) throw Error("parameter-dependent value is not a rational constant");
  return num_.constant_term() / den_.constant_term();
}

ParamPoly RatFunc::num_in(std::size_t nvars) const {
  if (num_.nvars() == nvars) return num_;
  if (num_.nvars() != 0) throw ParamSetMismatch("parameter count mismatch");
  return ParamPoly::constant(nvars, num_.constant_term());
}

ParamPoly RatFunc::den_in(std::size_t nvars) const {
  if (den_.nvars() == nvars) return den_;
  if (den_.nvars() != 0) throw ParamSetMismatch("parameter count mismatch");
  return ParamPoly::constant(nvars, den_.constant_term());
}

VarSetPtr RatFunc::common(const RatFunc& a, const RatFunc& b) {
  if (!a.params_) return b.params_;
  if (!b.params_) return a.params_;
  if (!same_varset(a.params_, b.params_)) throw ParamSetMismatch("elements over different parameter sets");
  return a.params_;
}

void RatFunc::normalize() {
  const std::size_t n = num_.nvars();
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(n, BigRat(1));
    return;
  }
  if (den_.is_constant()) {
    const BigRat d = den_.constant_term();
    if (!d.is_one()) {
      num_ = num_.scale(d.inverse());
      den_ = ParamPoly::constant(n, BigRat(1));
    }
    return;
  }
  ParamPoly g = parampoly::gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = parampoly::exact_div(num_, g);
    den_ = parampoly::exact_div(den_, g);
  }
  scale_denominator();
}

void RatFunc::scale_denominator() {
  const std::size_t n = num_.nvars();
  if (den_.is_constant()) {
    const BigRat d = den_.constant_term();
    if (!d.is_one()) {
      num_ = num_.scale(d.inverse());
      den_ = ParamPoly::constant(n, BigRat(1));
    }
    return;
  }
  const BigRat lc = den_.lex_leading().second;
  if (!lc.is_one()) {
    BigRat inv = lc.inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(params_, den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r = RatFunc::constant(params_, BigRat(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  VarSetPtr p = RatFunc::common(a, b);
  const std::size_t n = p ? p->size() : 0;
  if (a.is_zero()) return b.params_ == p ? b : RatFunc(p, b.num_in(n), b.den_in(n));
  if (b.is_zero()) return a.params_ == p ? a : RatFunc(p, a.num_in(n), a.den_in(n));
  ParamPoly ad = a.den_in(n), bd = b.den_in(n);
  if (ad == bd) return RatFunc(p, a.num_in(n) + b.num_in(n), ad);
  if (ad.is_constant() || bd.is_constant()) return RatFunc(p, a.num_in(n) * bd + b.num_in(n) * ad, ad * bd);
  const ParamPoly g = parampoly::gcd(ad, bd);
  const ParamPoly ag = parampoly::exact_div(ad, g), bg = parampoly::exact_div(bd, g);
  return RatFunc(p, a.num_in(n) * bg + b.num_in(n) * ag, ag * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  VarSetPtr p = RatFunc::common(a, b);
  const std::size_t n = p ? p->size() : 0;
  if (a.is_zero() || b.is_zero()) return RatFunc::constant(p, BigRat(0));
  ParamPoly an = a.num_in(n), ad = a.den_in(n), bn = b.num_in(n), bd = b.den_in(n);
  if (!ad.is_constant() && !bn.is_constant()) {
    const ParamPoly g = parampoly::gcd(bn, ad);
    if (!g.is_constant()) bn = parampoly::exact_div(bn, g), ad = parampoly::exact_div(ad, g);
  }
  if (!bd.is_constant() && !an.is_constant()) {
    const ParamPoly g = parampoly::gcd(an, bd);
    if (!g.is_constant()) an = parampoly::exact_div(an, g), bd = parampoly::exact_div(bd, g);
  }
  RatFunc r;
  r.params_ = p;
  r.num_ = an * bn;
  r.den_ = ad * bd;
  r.scale_denominator();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  VarSetPtr p = RatFunc::common(a, b);
  const std::size_t n = p ? p->size() : 0;
  return a.num_in(n) * b.den_in(n) == b.num_in(n) * a.den_in(n);
}

RatFunc RatFunc::embed(const VarSetPtr& target) const {
  const std::size_t n = target ? target->size() : 0;
  if (!params_) return RatFunc(target, num_in(n), den_in(n));
  if (same_varset(params_, target)) return RatFunc(target, num_, den_);
  if (!target) throw ParamSetMismatch("cannot drop parameters");
  std::vector<std::size_t> map(params_->size());
  for (std::size_t i = 0; i < params_->size(); ++i) {
    auto j = target->find(params_->name(i));
    if (!j) throw ParamSetMismatch("parameter '" + params_->name(i) + "' missing from target set");
    map[i] = *j;
  }
  return RatFunc(target, num_.remap(n, map), den_.remap(n, map));
}

RatFunc RatFunc::specialize(std::size_t param_index, const BigRat& value) const {
  if (!params_ || param_index >= params_->size()) throw UnknownVariable("unknown parameter index");
  ParamPoly d = parampoly::specialize(den_, param_index, value);
  if (d.is_zero()) throw PoleAtPoint("parameter value is a pole");
  return RatFunc(params_, parampoly::specialize(num_, param_index, value), d);
}

// ---------------------------------------------------------------------------
// CubicExt

CubicExt::CubicExt(VarSetPtr params) : params_(std::move(params)) {
  if (!params_) throw UnknownVariable("cubic extension needs the parameter q");
  q_index_ = params_->index_of("q");
}

CubicExt::CubicExt(VarSetPtr params, RatFunc c0, RatFunc c1, RatFunc c2) : CubicExt(std::move(params)) {
  c_ = {std::move(c0), std::move(c1), std::move(c2)};
  for (auto& c : c_) c = c.embed(params_);
}

CubicExt CubicExt::xi(const VarSetPtr& params) { return CubicExt(params, RatFunc(0), RatFunc(1), RatFunc(0)); }

RatFunc CubicExt::four_q() const { return RatFunc(4) * RatFunc::param(params_, q_index_); }

CubicExt CubicExt::operator-() const { return CubicExt(params_, -c_[0], -c_[1], -c_[2]); }

CubicExt operator+(const CubicExt& a, const CubicExt& b) {
  if (!same_varset(a.params_, b.params_)) throw ParamSetMismatch("elements over different bases");
  return CubicExt(a.params_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

CubicExt operator-(const CubicExt& a, const CubicExt& b) { return a + (-b); }

CubicExt operator*(const CubicExt& a, const CubicExt& b) {
  if (!same_varset(a.params_, b.params_)) throw ParamSetMismatch("elements over different bases");
  const auto& x = a.c_;
  const auto& y = b.c_;
  RatFunc d0 = x[0] * y[0];
  RatFunc d1 = x[0] * y[1] + x[1] * y[0];
  RatFunc d2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
  RatFunc d3 = x[1] * y[2] + x[2] * y[1];
  RatFunc d4 = x[2] * y[2];
  RatFunc fq = a.four_q();
  return CubicExt(a.params_, d0 + fq * d3, d1 + fq * d4, d2);
}

CubicExt CubicExt::inverse() const {
  // First column of the adjugate of the multiplication-by-this matrix.
  const RatFunc fq = four_q();
  const auto& a = c_;
  RatFunc c0 = a[0] * a[0] - fq * a[2] * a[1];
  RatFunc c1 = fq * a[2] * a[2] - a[0] * a[1];
  RatFunc c2 = a[1] * a[1] - a[0] * a[2];
  RatFunc det = a[0] * c0 + fq * a[2] * c1 + fq * a[1] * c2;
  if (det.is_zero()) throw DivisionByZero();
  return CubicExt(params_, c0 / det, c1 / det, c2 / det);
}

CubicExt CubicExt::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  CubicExt r(params_, RatFunc(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const CubicExt& a, const CubicExt& b) {
  if (!same_varset(a.params_, b.params_)) throw ParamSetMismatch("elements over different bases");
  return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

}  // namespace lgq
