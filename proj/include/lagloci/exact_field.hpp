#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "lagloci/errors.hpp"

namespace lagloci {

/// Exact element of Q backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of a number type
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical text: "p" when the denominator is 1, else "p/q".
  std::string str() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral T>
  GaussianRational(T n) : re_(n) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts sums of real and imaginary terms: "p/q+r/s*i", "r/s*i", "-i",
  /// "3", "2*i-1/2". Whitespace is ignored.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// z * conj(z), a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text, the inverse of parse: "1/2", "-3*i", "1/2-1/2*i", "i".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

enum class ArithOp { add, sub, mul, div };

GaussianRational gaussian_arith(const GaussianRational& lhs, const GaussianRational& rhs, ArithOp op);

/// True iff x is real and strictly positive.
bool is_positive_real(const GaussianRational& x);

GaussianRational inverse(const GaussianRational& x);

}  // namespace lagloci
