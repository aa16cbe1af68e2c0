#include "riley/symbolic_matrix.hpp"

#include <stdexcept>

namespace riley {

SymbolicMatrix2 SymbolicMatrix2::identity() {
  return {LaurentPolynomial::constant(1), LaurentPolynomial::zero(), LaurentPolynomial::zero(),
          LaurentPolynomial::constant(1)};
}

SymbolicMatrix2 SymbolicMatrix2::parabolic_power(std::int64_t k) {
  return {LaurentPolynomial::constant(1), LaurentPolynomial::constant(k), LaurentPolynomial::zero(),
          LaurentPolynomial::constant(1)};
}

SymbolicMatrix2 SymbolicMatrix2::involution() {
  return {LaurentPolynomial::zero(), LaurentPolynomial::monomial(-1, -1),
          LaurentPolynomial::monomial(1, 1), LaurentPolynomial::zero()};
}

LaurentPolynomial SymbolicMatrix2::determinant() const { return a * d - b * c; }

LaurentPolynomial SymbolicMatrix2::trace() const { return a + d; }

SymbolicMatrix2 SymbolicMatrix2::inverse() const {
  if (!determinant().is_one())
    throw std::invalid_argument("matrix inverse requires determinant exactly 1");
  return {d, -b, -c, a};
}

SymbolicMatrix2 operator*(const SymbolicMatrix2& lhs, const SymbolicMatrix2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

LaurentPolynomial gamma_of(const SymbolicMatrix2& m) {
  if (!m.determinant().is_one())
    throw std::invalid_argument("gamma_of requires determinant exactly 1");
  SymbolicMatrix2 f = SymbolicMatrix2::parabolic();
  SymbolicMatrix2 commutator = f * m * f.inverse() * m.inverse();
  return commutator.trace() - LaurentPolynomial::constant(2);
}

}  // namespace riley
