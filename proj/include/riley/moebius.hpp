#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "riley/words.hpp"

namespace riley {

using Complex = std::complex<double>;

/// Numeric 2x2 complex matrix, row-major (a b / c d).  Group elements are
/// kept at determinant 1 so the adjugate is the inverse.
struct Matrix2c {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Matrix2c identity() { return {}; }
  static Matrix2c parabolic_power(std::int64_t k) {
    return {1.0, static_cast<double>(k), 0.0, 1.0};
  }
  static Matrix2c parabolic() { return parabolic_power(1); }

  Complex determinant() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  Matrix2c inverse_unimodular() const { return {d, -b, -c, a}; }

  friend Matrix2c operator*(const Matrix2c& l, const Matrix2c& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  Matrix2c operator-() const { return {-a, -b, -c, -d}; }
};

/// tr(x y x^-1 y^-1) - 2; vanishes exactly when the pair is reducible.
Complex gamma(const Matrix2c& x, const Matrix2c& y);

/// tr^2 - 4; zero for parabolics.
Complex beta(const Matrix2c& x);

struct PrincipalCharacter {
  Complex gamma;
  Complex beta_a;
  Complex beta_b;
};
PrincipalCharacter principal_character(const Matrix2c& x, const Matrix2c& y);

/// [[0, -1/s], [s, 0]] for s = sqrt(z); order two, determinant 1, and
/// gamma(f, phi) = s^2 = z.
Matrix2c phi_generator(Complex sqrt_z);

/// w_s evaluated with every b-letter sent to h: h f^{s1} h ... f^{sm} h.
/// Intended for order-two h, where the b-signs are immaterial.
Matrix2c word_matrix(const ExponentWord& s, const Matrix2c& h);

/// w_s with alternating b-signs (h, h^-1, h, ...), the form valid for
/// arbitrary h of determinant 1.
Matrix2c good_word_matrix(const ExponentWord& s, const Matrix2c& h);

/// The order-two element [[a, -(1+a^2)/c], [c, -a]] built from h = (a b / c d),
/// det h = 1: it conjugates the parabolic f the same way h does and carries
/// the same gamma.  Requires |c| > 1e-12; c = 0 is the reducible case.
Matrix2c psi_involution(const Matrix2c& h);

/// For a parabolic f (trace +/-2, not the identity) in an arbitrary frame:
/// conjugates to the normal form, applies psi_involution to the conjugated h,
/// and maps back.  Returns (f, psi).  Throws if f is not parabolic or if
/// gamma(f, h) vanishes.
std::pair<Matrix2c, Matrix2c> z2_extend(const Matrix2c& f, const Matrix2c& h);

/// The slice group at z: f = [[1,1],[0,1]], g = [[1,0],[z,1]], gamma(f,g) = z^2.
struct ParabolicPair {
  Complex z;
  Matrix2c f;
  Matrix2c g;
};
ParabolicPair make_parabolic_pair(Complex z);

}  // namespace riley
