#pragma once

#include <cstdint>

#include "riley/laurent_polynomial.hpp"

namespace riley {

/// 2x2 matrix over Z[s, s^-1], row-major entries (a b / c d).
///
/// The two fixed generators are
///   F   = [[1, 1], [0, 1]]        the parabolic,
///   Phi = [[0, -s^-1], [s, 0]]    order two in PSL(2), determinant 1,
/// chosen so that gamma_of(Phi) = s^2, i.e. the slice parameter z itself.
struct SymbolicMatrix2 {
  LaurentPolynomial a, b, c, d;

  static SymbolicMatrix2 identity();
  static SymbolicMatrix2 parabolic_power(std::int64_t k);  // F^k = [[1,k],[0,1]]
  static SymbolicMatrix2 parabolic() { return parabolic_power(1); }
  static SymbolicMatrix2 involution();  // Phi

  LaurentPolynomial determinant() const;
  LaurentPolynomial trace() const;

  /// Adjugate inverse [[d,-b],[-c,a]]; requires determinant exactly 1.
  SymbolicMatrix2 inverse() const;

  friend SymbolicMatrix2 operator*(const SymbolicMatrix2& lhs, const SymbolicMatrix2& rhs);
  friend bool operator==(const SymbolicMatrix2&, const SymbolicMatrix2&) = default;
};

/// gamma(f, m) = tr(F m F^-1 m^-1) - 2 as an exact Laurent polynomial.
/// Requires det m = 1.
LaurentPolynomial gamma_of(const SymbolicMatrix2& m);

}  // namespace riley
