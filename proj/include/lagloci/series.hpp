#pragma once

#include <map>
#include <optional>
#include <utility>

#include "lagloci/exact_field.hpp"

namespace lagloci {

enum class Var { u1, u2 };

/// Truncated power series in (u1, u2) over Q(i), valid up to total degree
/// `order()`. Coefficients are stored sparsely; absent monomials are zero.
///
/// Binary operators combine operands of different orders by keeping the
/// smaller one (the result is only known that far). `series_arith` is the
/// strict variant that refuses mismatched orders.
class BiSeries {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, GaussianRational>;

  explicit BiSeries(int order);

  static BiSeries constant(const GaussianRational& c, int order);
  static BiSeries variable(Var v, int order);
  static BiSeries monomial(int i, int j, const GaussianRational& c, int order);

  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }

  GaussianRational coeff(int i, int j) const;
  /// Monomials above the truncation order are silently dropped.
  void set_coeff(int i, int j, const GaussianRational& c);
  void add_to_coeff(int i, int j, const GaussianRational& c);

  GaussianRational constant_term() const { return coeff(0, 0); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_unit() const { return !constant_term().is_zero(); }
  /// Lowest total degree carrying a nonzero coefficient.
  std::optional<int> valuation() const;

  /// Same coefficients, lower truncation order (n <= order()).
  BiSeries truncated(int n) const;
  /// Reinterprets the stored coefficients as a polynomial jet of order n;
  /// raising the order pads with zeros.
  BiSeries with_order(int n) const;

  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& rhs);
  BiSeries& operator-=(const BiSeries& rhs);
  BiSeries& operator*=(const GaussianRational& c);

  friend BiSeries operator+(BiSeries lhs, const BiSeries& rhs) { return lhs += rhs; }
  friend BiSeries operator-(BiSeries lhs, const BiSeries& rhs) { return lhs -= rhs; }
  friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);
  friend BiSeries operator*(BiSeries s, const GaussianRational& c) { return s *= c; }
  friend BiSeries operator*(const GaussianRational& c, BiSeries s) { return s *= c; }

  /// Agreement of all coefficients up to the smaller of the two orders.
  friend bool operator==(const BiSeries& a, const BiSeries& b);

  /// Value with u2 = 0 as a list of u1 coefficients (index = power).
  std::map<int, GaussianRational> restrict_u2_zero() const;

 private:
  int order_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BiSeries& s);

/// Truncated power series in one variable t.
class UniSeries {
 public:
  using Terms = std::map<int, GaussianRational>;

  explicit UniSeries(int order);
  static UniSeries constant(const GaussianRational& c, int order);
  static UniSeries monomial(int i, const GaussianRational& c, int order);

  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  GaussianRational coeff(int i) const;
  void set_coeff(int i, const GaussianRational& c);
  GaussianRational constant_term() const { return coeff(0); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<int> valuation() const;

  UniSeries truncated(int n) const;
  UniSeries with_order(int n) const;
  UniSeries derivative() const;

  /// The same series viewed as a function of (u1, u2) depending on `v` only.
  BiSeries as_bi(Var v) const;

  UniSeries operator-() const;
  UniSeries& operator+=(const UniSeries& rhs);
  UniSeries& operator-=(const UniSeries& rhs);
  UniSeries& operator*=(const GaussianRational& c);
  friend UniSeries operator+(UniSeries lhs, const UniSeries& rhs) { return lhs += rhs; }
  friend UniSeries operator-(UniSeries lhs, const UniSeries& rhs) { return lhs -= rhs; }
  friend UniSeries operator*(const UniSeries& lhs, const UniSeries& rhs);
  friend UniSeries operator*(UniSeries s, const GaussianRational& c) { return s *= c; }
  friend UniSeries operator*(const GaussianRational& c, UniSeries s) { return s *= c; }
  friend bool operator==(const UniSeries& a, const UniSeries& b);

 private:
  int order_;
  Terms terms_;
};

enum class SeriesOp { add, sub, mul };

/// Strict ring operation: both operands must share one truncation order.
BiSeries series_arith(const BiSeries& lhs, const BiSeries& rhs, SeriesOp op);

/// Multiplicative inverse of a unit (nonzero constant term), same order.
BiSeries series_invert(const BiSeries& s);

/// Formal partial derivative; the result is valid to order() - 1.
BiSeries series_diff(const BiSeries& s, Var v);

/// s(L u) for a constant 2x2 matrix L = [[l11, l12], [l21, l22]], i.e.
/// u1 -> l11 u1 + l12 u2 and u2 -> l21 u1 + l22 u2. Preserves the order.
BiSeries linear_substitute(const BiSeries& s, const GaussianRational& l11, const GaussianRational& l12,
                           const GaussianRational& l21, const GaussianRational& l22);

// Ring hooks used by the generic matrix and cubic code below. The scalar
// overloads treat Q(i) as the order-infinity case.
inline GaussianRational constant_term(const GaussianRational& x) { return x; }
inline GaussianRational constant_term(const BiSeries& x) { return x.constant_term(); }
inline GaussianRational zero_like(const GaussianRational&) { return {}; }
inline BiSeries zero_like(const BiSeries& x) { return BiSeries(x.order()); }
inline GaussianRational one_like(const GaussianRational&) { return 1; }
inline BiSeries one_like(const BiSeries& x) { return BiSeries::constant(1, x.order()); }
inline bool is_exact_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_exact_zero(const BiSeries& x) { return x.is_zero(); }
GaussianRational unit_inverse(const GaussianRational& x);
inline int leading_order(const GaussianRational&) { return 0; }
inline int leading_order(const BiSeries& x) { return x.valuation().value_or(-1); }
inline BiSeries unit_inverse(const BiSeries& x) { return series_invert(x); }

}  // namespace lagloci
