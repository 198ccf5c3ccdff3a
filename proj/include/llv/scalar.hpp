#pragma once

// Exact scalars: rationals (int64 fast path, GMP beyond) and Gaussian
// rationals a + b i with i^2 = -1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace llv {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : Rational(static_cast<long long>(n)) {}
  Rational(long n) : Rational(static_cast<long long>(n)) {}
  Rational(long long n);
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  /// Parses "n" or "n/d" (optional sign, no decimals or exponents).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  /// Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> sqrt_exact() const;
  /// Exact k-th root (k >= 1); negative values only for odd k.
  std::optional<Rational> root_exact(int k) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_reduced(__int128 num, __int128 den);
  void set_big(mpq_class q);

  // Small form when big_ is null: den_ > 0, gcd(num_, den_) = 1.
  // Values representable in the small form are never stored big.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

inline Rational conj(const Rational& x) { return x; }

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int n) : re_(n) {}
  Gaussian(long n) : re_(n) {}
  Gaussian(long long n) : re_(n) {}
  Gaussian(const Rational& re) : re_(re) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  /// Parses "a", "b i", "a+b i", "a-b i" with rational a, b.
  static Gaussian parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string to_string() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& x);

inline Gaussian conj(const Gaussian& x) { return x.conj(); }

/// Per-field hooks used by the templated linear algebra.
template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr const char* name = "rational";
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static bool is_real(const Rational&) { return true; }
  static Rational real_part(const Rational& x) { return x; }
};

template <>
struct FieldTraits<Gaussian> {
  static constexpr const char* name = "gaussian";
  static Gaussian parse(std::string_view s) { return Gaussian::parse(s); }
  static bool is_real(const Gaussian& x) { return x.is_real(); }
  static Rational real_part(const Gaussian& x) { return x.re(); }
};

}  // namespace llv
