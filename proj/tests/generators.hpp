#pragma once

// Seeded random generators for property tests. Everything is reproducible:
// each test constructs its own Gen with a fixed seed.

#include <random>

#include "lagloci/pipeline.hpp"

namespace lagloci::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(int num = 9, int den = 5) { return Rational(integer(-num, num), integer(1, den)); }
  Rational nonzero_rational(int num = 9, int den = 5) {
    for (;;) {
      Rational r = rational(num, den);
      if (!r.is_zero()) return r;
    }
  }

  /// Real with probability 1/2, otherwise a genuine Gaussian rational.
  GaussianRational scalar(int num = 9, int den = 5) {
    if (coin()) return GaussianRational(rational(num, den));
    return GaussianRational(rational(num, den), rational(num, den));
  }
  GaussianRational nonzero_scalar(int num = 9, int den = 5) {
    for (;;) {
      GaussianRational z = scalar(num, den);
      if (!z.is_zero()) return z;
    }
  }
  GaussianRational small_real(int bound = 3) { return GaussianRational(integer(-bound, bound)); }

  ScalarCubic cubic() { return {scalar(), scalar(), scalar(), scalar()}; }
  ScalarCubic nonzero_cubic() {
    for (;;) {
      ScalarCubic f = cubic();
      if (!is_zero(f)) return f;
    }
  }
  ScalarQuadratic quadratic() { return {scalar(), scalar(), scalar()}; }

  GL2 group_element() {
    for (;;) {
      GaussianRational a = scalar(4, 3), b = scalar(4, 3), c = scalar(4, 3), d = scalar(4, 3);
      if (!(a * d - b * c).is_zero()) return GL2(a, b, c, d);
    }
  }

  /// Sparse polynomial of total degree in [lo, hi] with `terms` random monomials.
  BiSeries sparse_series(int order, int lo, int hi, int terms, int num = 5, int den = 3) {
    BiSeries s(order);
    for (int k = 0; k < terms; ++k) {
      const int d = integer(lo, hi);
      const int j = integer(0, d);
      s.add_to_coeff(d - j, j, scalar(num, den));
    }
    return s;
  }

  UniSeries sparse_uni(int order, int lo, int hi, int terms, int num = 5, int den = 3) {
    UniSeries s(order);
    for (int k = 0; k < terms; ++k) {
      const int i = integer(lo, hi);
      s.set_coeff(i, s.coeff(i) + scalar(num, den));
    }
    return s;
  }

  SiegelPoint siegel_point() {
    // Im Z = [[p, r], [r, s]] with p > 0 and p s > r^2.
    const Rational p(integer(1, 4), integer(1, 3));
    const Rational r(integer(-2, 2), integer(1, 3));
    const Rational s = (r * r) / p + Rational(integer(1, 4), integer(1, 3));
    return {GaussianRational(rational(3, 2), p), GaussianRational(rational(3, 2), r),
            GaussianRational(rational(3, 2), s)};
  }

  /// Sparse surface germ with data of degree <= 3 and an immersive linear part.
  SurfaceGerm surface_germ(int order) {
    for (;;) {
      std::array<BiSeries, 3> comps{BiSeries(order), BiSeries(order), BiSeries(order)};
      for (auto& c : comps) {
        c.set_coeff(1, 0, coin(0.7) ? GaussianRational(small_real(2)) : GaussianRational());
        c.set_coeff(0, 1, coin(0.7) ? GaussianRational(small_real(2)) : GaussianRational());
        c += sparse_series(order, 2, 3, integer(0, 2));
      }
      SurfaceGerm g{siegel_point(), comps, order};
      if (validate_germ(g).ok()) return g;
    }
  }

  /// Null curve with tangent quadratic (lambda X + mu Y)^2 for random
  /// polynomials lambda, mu not both vanishing at 0.
  CurveGerm null_curve(int order, bool constant_direction = false) {
    for (;;) {
      UniSeries lambda = UniSeries::constant(small_real(2), order - 1);
      UniSeries mu = UniSeries::constant(small_real(2), order - 1);
      if (!constant_direction) {
        lambda += sparse_uni(order - 1, 1, 2, integer(0, 2), 3, 2);
        mu += sparse_uni(order - 1, 1, 2, integer(0, 2), 3, 2);
      }
      if (lambda.constant_term().is_zero() && mu.constant_term().is_zero()) continue;
      const std::array<UniSeries, 3> derivs{lambda * lambda, lambda * mu, mu * mu};
      std::array<UniSeries, 3> comps{UniSeries(order), UniSeries(order), UniSeries(order)};
      for (std::size_t k = 0; k < 3; ++k) comps[k] = integrate(derivs[k], order);
      return {siegel_point(), comps, order};
    }
  }

  static UniSeries integrate(const UniSeries& s, int order) {
    UniSeries out(order);
    for (const auto& [i, c] : s.terms()) out.set_coeff(i + 1, c * inverse(GaussianRational(i + 1)));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lagloci::testing
