#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "riley/integer.hpp"

namespace riley {

/// Exact polynomial in z with arbitrary-precision integer coefficients,
/// stored in ascending degree order.  The zero polynomial is the empty
/// coefficient vector; it has no degree and callers must branch on
/// is_zero() before asking for one.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial zero() { return IntPolynomial{}; }
  static IntPolynomial constant(Integer c);
  static IntPolynomial identity();  // p(z) = z
  static IntPolynomial monomial(std::size_t k, Integer c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const;  // throws std::logic_error on the zero polynomial
  const Integer& leading_coefficient() const;
  Integer coefficient(std::size_t k) const;  // 0 beyond the stored range
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial derivative() const;
  std::complex<double> evaluate(std::complex<double> z) const;

  Integer sum_abs_coefficients() const;
  Integer max_abs_coefficient() const;

  /// Largest k with z^k dividing p; 0 for p(0) != 0, undefined (throws) on zero.
  std::size_t trailing_zeros() const;
  IntPolynomial divided_by_power(std::size_t k) const;

  std::string to_string() const;  // e.g. "z^3 - 2*z^2 + z"

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// p(q(z)), exact.
IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace riley
