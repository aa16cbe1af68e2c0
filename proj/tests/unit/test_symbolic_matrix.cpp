#include <doctest.h>

#include "riley/symbolic_matrix.hpp"

using riley::LaurentPolynomial;
using riley::SymbolicMatrix2;

TEST_CASE("generator products") {
  SymbolicMatrix2 f = SymbolicMatrix2::parabolic();
  SymbolicMatrix2 phi = SymbolicMatrix2::involution();
  CHECK(f * f == SymbolicMatrix2::parabolic_power(2));
  CHECK(f * SymbolicMatrix2::identity() == f);
  // phi^2 = -I: the identity in the projective group
  SymbolicMatrix2 phi2 = phi * phi;
  CHECK(phi2.a == LaurentPolynomial::constant(-1));
  CHECK(phi2.d == LaurentPolynomial::constant(-1));
  CHECK(phi2.b.is_zero());
  CHECK(phi2.c.is_zero());
}

TEST_CASE("determinants of the generators") {
  CHECK(SymbolicMatrix2::parabolic().determinant().is_one());
  CHECK(SymbolicMatrix2::involution().determinant().is_one());
  CHECK(SymbolicMatrix2::parabolic_power(-7).determinant().is_one());
}

TEST_CASE("inverse") {
  SymbolicMatrix2 f = SymbolicMatrix2::parabolic();
  CHECK(f.inverse() == SymbolicMatrix2::parabolic_power(-1));
  SymbolicMatrix2 phi = SymbolicMatrix2::involution();
  SymbolicMatrix2 phi_inv = phi.inverse();
  CHECK(phi_inv.b == LaurentPolynomial::monomial(-1));
  CHECK(phi_inv.c == LaurentPolynomial::monomial(1, -1));
  CHECK(phi * phi_inv == SymbolicMatrix2::identity());

  // determinant s^2 is rejected
  SymbolicMatrix2 bad{LaurentPolynomial::monomial(1), LaurentPolynomial::zero(),
                      LaurentPolynomial::zero(), LaurentPolynomial::monomial(1)};
  CHECK_THROWS_AS(bad.inverse(), std::invalid_argument);
}

TEST_CASE("gamma of the generators") {
  SymbolicMatrix2 f = SymbolicMatrix2::parabolic();
  SymbolicMatrix2 phi = SymbolicMatrix2::involution();
  CHECK(gamma_of(phi) == LaurentPolynomial::monomial(2));  // s^2, i.e. z
  CHECK(gamma_of(f).is_zero());                            // commuting elements
  SymbolicMatrix2 conj = phi * f * phi.inverse();
  CHECK(gamma_of(conj) == LaurentPolynomial::monomial(4));  // s^4, i.e. z^2

  SymbolicMatrix2 bad{LaurentPolynomial::monomial(1), LaurentPolynomial::zero(),
                      LaurentPolynomial::zero(), LaurentPolynomial::monomial(1)};
  CHECK_THROWS_AS(gamma_of(bad), std::invalid_argument);
}

TEST_CASE("gamma equals the squared lower-left entry") {
  // tr(F m F^-1 m^-1) - 2 = c^2 for any det-1 matrix; independent route
  // through the commutator must agree with the closed form.
  SymbolicMatrix2 f = SymbolicMatrix2::parabolic();
  SymbolicMatrix2 phi = SymbolicMatrix2::involution();
  SymbolicMatrix2 w = phi;
  for (int e : {1, -2, 3}) {
    w = w * SymbolicMatrix2::parabolic_power(e) * phi;
    CHECK(gamma_of(w) == w.c * w.c);
  }
  CHECK(gamma_of(f * phi) == (f * phi).c * (f * phi).c);
}
