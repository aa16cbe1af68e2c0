#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riley/int_polynomial.hpp"
#include "riley/integer.hpp"

namespace riley {

/// Exact Laurent polynomial over Z in the variable s, where s^2 = z.
/// Coefficients run ascending from min_exponent; both ends are kept
/// nonzero, and the zero polynomial stores nothing.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t min_exp, std::vector<Integer> coeffs);

  static LaurentPolynomial zero() { return LaurentPolynomial{}; }
  static LaurentPolynomial constant(Integer c);
  static LaurentPolynomial monomial(std::int64_t exp, Integer c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  std::int64_t min_exponent() const;  // throws on the zero polynomial
  std::int64_t max_exponent() const;
  Integer coefficient(std::int64_t exp) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial&, const LaurentPolynomial&);
  friend LaurentPolynomial operator-(const LaurentPolynomial&, const LaurentPolynomial&);
  friend LaurentPolynomial operator*(const LaurentPolynomial&, const LaurentPolynomial&);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::int64_t min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Rewrites even nonnegative powers of s as powers of z: the returned q
/// satisfies q(s^2) = L(s).  Throws std::domain_error when L carries an odd
/// or negative exponent; for matrices built from the fixed generators that
/// signals a structural bug, not a numeric failure.
IntPolynomial to_z_polynomial(const LaurentPolynomial& l);

}  // namespace riley
