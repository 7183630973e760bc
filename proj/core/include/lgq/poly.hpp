#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lgq/monomial.hpp"

namespace lgq {

/// Sparse multivariate (Laurent) polynomial with coefficients in C.
///
/// Terms are kept sorted by exponent vector in descending lexicographic order
/// (variable 0 most significant) with no stored zero coefficients, so two
/// polynomials are equal iff their term sequences are equal. C must provide
/// ring operations, unary minus, construction from `long`, and `is_zero()`.
template <class C>
class Poly {
 public:
  using Term = std::pair<Monomial, C>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, C c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), std::move(c));
    return p;
  }

  static Poly term(Monomial m, C c) {
    Poly p(m.size());
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t index, std::int32_t power = 1) {
    return term(Monomial::var(nvars, index, power), C(1));
  }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms) {
    Poly p(nvars);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
  }

  /// Coefficient of the unit monomial (zero if absent).
  C constant_term() const {
    for (const auto& [m, c] : terms_)
      if (m.is_one()) return c;
    return C(0);
  }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first > key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }

  /// Leading term in lexicographic order; undefined on zero.
  const Term& lex_leading() const { return terms_.front(); }

  bool is_polynomial() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first.is_nonnegative(); });
  }

  std::int32_t max_degree(std::size_t var) const {
    std::int32_t d = INT32_MIN;
    for (const auto& t : terms_) d = std::max(d, t.first[var]);
    return terms_.empty() ? 0 : d;
  }

  std::int32_t min_degree(std::size_t var) const {
    std::int32_t d = INT32_MAX;
    for (const auto& t : terms_) d = std::min(d, t.first[var]);
    return terms_.empty() ? 0 : d;
  }

  std::int64_t total_degree() const {
    std::int64_t d = INT64_MIN;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return terms_.empty() ? 0 : d;
  }

  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.first[var] != 0; });
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(a.nvars_, std::move(out));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly mul_term(const Monomial& m, const C& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves lexicographic order.
    for (const auto& [mt, ct] : terms_) {
      C prod = ct * c;
      if (!prod.is_zero()) r.terms_.emplace_back(mt * m, std::move(prod));
    }
    return r;
  }

  Poly scale(const C& c) const { return mul_term(Monomial(nvars_), c); }

  Poly pow(unsigned k) const {
    Poly result = constant(nvars_, C(1));
    Poly base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  /// Formal partial derivative; negative exponents are allowed.
  Poly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial nm = m;
      nm[var] = m[var] - 1;
      out.emplace_back(nm, c * C(static_cast<long>(m[var])));
    }
    return from_terms(nvars_, std::move(out));
  }

  /// var * d/dvar; every monomial is an eigenvector.
  Poly log_derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_)
      if (m[var] != 0) out.emplace_back(m, c * C(static_cast<long>(m[var])));
    return from_terms(nvars_, std::move(out));
  }

  template <class F>
  auto map_coefficients(F&& f) const -> Poly<std::invoke_result_t<F, const C&>> {
    using D = std::invoke_result_t<F, const C&>;
    std::vector<typename Poly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, f(c));
    return Poly<D>::from_terms(nvars_, std::move(out));
  }

  /// Re-indexes variables: variable i of this polynomial becomes variable
  /// map[i] of a polynomial in `new_nvars` variables.
  Poly remap(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm(new_nvars);
      for (std::size_t i = 0; i < nvars_; ++i) nm[map[i]] = m[i];
      out.emplace_back(nm, c);
    }
    return from_terms(new_nvars, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first)) return false;
      if (!(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = out.back().second + t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        const auto& t = b.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace lgq
