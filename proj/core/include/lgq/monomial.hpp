#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "lgq/errors.hpp"

namespace lgq {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a (Laurent) monomial. Exponents are signed; all
/// arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(checked_size(nvars)) {}
  Monomial(std::initializer_list<std::int32_t> exps) : n_(checked_size(exps.size())) {
    std::size_t i = 0;
    for (auto e : exps) e_[i++] = e;
  }
  explicit Monomial(std::span<const std::int32_t> exps) : n_(checked_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = exps[i];
  }

  static Monomial var(std::size_t nvars, std::size_t index, std::int32_t power = 1) {
    Monomial m(nvars);
    m.e_[index] = power;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  std::int32_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::int32_t& operator[](std::size_t i) noexcept { return e_[i]; }
  std::span<const std::int32_t> exponents() const noexcept { return {e_.data(), n_}; }

  std::int64_t degree() const noexcept {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }

  bool is_one() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  bool is_nonnegative() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] < 0) return false;
    return true;
  }

  /// True iff this monomial divides `other` in the polynomial ring.
  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > 0 && other.e_[i] > 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = add(a.e_[i], b.e_[i]);
    return r;
  }

  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = add(a.e_[i], negate(b.e_[i]));
    return r;
  }

  Monomial pow(std::int32_t k) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = mul(e_[i], k);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

  /// Lexicographic comparison with variable 0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.n_ && i < b.n_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return a.n_ <=> b.n_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ static_cast<std::uint32_t>(e_[i]);
    return h;
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVars) throw Error("too many variables (limit is 16)");
    return static_cast<std::uint8_t>(n);
  }
  static std::int32_t add(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("exponent overflow");
    return r;
  }
  static std::int32_t mul(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow("exponent overflow");
    return r;
  }
  static std::int32_t negate(std::int32_t a) {
    if (a == INT32_MIN) throw ExponentOverflow("exponent overflow");
    return -a;
  }

  std::array<std::int32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

}  // namespace lgq
