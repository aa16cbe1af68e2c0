#include <doctest.h>

#include <cmath>
#include <random>

#include "riley/moebius.hpp"

using riley::Complex;
using riley::Matrix2c;

namespace {

double entry_distance(const Matrix2c& l, const Matrix2c& r) {
  return std::max(std::max(std::abs(l.a - r.a), std::abs(l.b - r.b)),
                  std::max(std::abs(l.c - r.c), std::abs(l.d - r.d)));
}

Matrix2c random_sl2(std::mt19937& rng, double min_c = 0.0) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    Complex a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    if (std::abs(a) < 0.2 || std::abs(c) < min_c) continue;
    return {a, b, c, (1.0 + b * c) / a};
  }
}

}  // namespace

TEST_CASE("gamma of the standard pair") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Complex z{u(rng), u(rng)};
    if (std::abs(z) < 0.1) continue;
    auto pair = riley::make_parabolic_pair(z);
    CHECK(std::abs(riley::gamma(pair.f, pair.g) - z * z) <=
          1e-12 * std::max(1.0, std::abs(z * z)));
    Complex s = std::sqrt(z);
    CHECK(std::abs(riley::gamma(pair.f, riley::phi_generator(s)) - z) <= 1e-12);
    auto ch = riley::principal_character(pair.f, pair.g);
    CHECK(std::abs(ch.beta_a) <= 1e-12);
    CHECK(std::abs(ch.beta_b) <= 1e-12);
  }
}

TEST_CASE("phi generator") {
  Complex s{0.7, 0.4};
  Matrix2c phi = riley::phi_generator(s);
  CHECK(std::abs(phi.determinant() - 1.0) <= 1e-15);
  Matrix2c sq = phi * phi;
  CHECK(entry_distance(sq, -Matrix2c::identity()) <= 1e-15);
  CHECK_THROWS_AS(riley::phi_generator(0.0), std::invalid_argument);
}

TEST_CASE("psi involution on integer matrices is exact") {
  Matrix2c h{1.0, 0.0, 1.0, 1.0};
  Matrix2c psi = riley::psi_involution(h);
  CHECK(psi.a == Complex(1.0));
  CHECK(psi.b == Complex(-2.0));
  CHECK(psi.c == Complex(1.0));
  CHECK(psi.d == Complex(-1.0));
  CHECK(psi.trace() == Complex(0.0));
  CHECK(psi.determinant() == Complex(1.0));
  Matrix2c sq = psi * psi;
  CHECK(entry_distance(sq, -Matrix2c::identity()) == 0.0);

  Matrix2c j{0.0, -1.0, 1.0, 0.0};
  CHECK(entry_distance(riley::psi_involution(j), j) == 0.0);

  CHECK_THROWS_AS(riley::psi_involution(Matrix2c::parabolic()), std::invalid_argument);
}

TEST_CASE("psi involution properties on random matrices") {
  std::mt19937 rng(7);
  Matrix2c f = Matrix2c::parabolic();
  for (int trial = 0; trial < 50; ++trial) {
    Matrix2c h = random_sl2(rng, 0.1);
    Matrix2c psi = riley::psi_involution(h);
    CHECK(psi.trace() == Complex(0.0));
    CHECK(std::abs(psi.determinant() - 1.0) <= 1e-12);
    Matrix2c lhs = psi * f * psi.inverse_unimodular();
    Matrix2c rhs = h * f * h.inverse_unimodular();
    CHECK(entry_distance(lhs, rhs) <= 1e-12 * std::max(1.0, std::abs(h.c * h.c)));
    CHECK(std::abs(riley::gamma(f, psi) - riley::gamma(f, h)) <=
          1e-12 * std::max(1.0, std::abs(h.c * h.c)));
  }
}

TEST_CASE("z2 extension in the normal frame") {
  Matrix2c f = Matrix2c::parabolic();
  Complex c{1.0, 1.0};
  Matrix2c h{1.5, 0.5, c, (1.0 + 0.5 * c) / 1.5};
  auto [f2, psi] = riley::z2_extend(f, h);
  CHECK(entry_distance(f2, f) == 0.0);
  // gamma(f, psi) = c^2 = 2i
  CHECK(std::abs(riley::gamma(f, psi) - Complex(0.0, 2.0)) <= 1e-12);
  CHECK(std::abs(psi.trace()) <= 1e-12);
}

TEST_CASE("z2 extension rejects degenerate input") {
  Matrix2c f = Matrix2c::parabolic();
  CHECK_THROWS_AS(riley::z2_extend(f, f), std::invalid_argument);  // gamma = 0
  Matrix2c loxodromic{2.0, 0.0, 0.0, 0.5};
  CHECK_THROWS_AS(riley::z2_extend(loxodromic, f), std::invalid_argument);
  CHECK_THROWS_AS(riley::z2_extend(Matrix2c::identity(), f), std::invalid_argument);
}

TEST_CASE("z2 extension is conjugation invariant") {
  std::mt19937 rng(13);
  Matrix2c f0 = Matrix2c::parabolic();
  for (int trial = 0; trial < 25; ++trial) {
    Matrix2c h0 = random_sl2(rng, 0.3);
    Matrix2c m = random_sl2(rng);
    Matrix2c f = m * f0 * m.inverse_unimodular();
    Matrix2c h = m * h0 * m.inverse_unimodular();
    auto [fr, psi] = riley::z2_extend(f, h);
    Complex expected = riley::gamma(f0, h0);
    CHECK(std::abs(riley::gamma(f, h) - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    CHECK(std::abs(riley::gamma(f, psi) - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    Matrix2c lhs = psi * f * psi.inverse_unimodular();
    Matrix2c rhs = h * f * h.inverse_unimodular();
    CHECK(entry_distance(lhs, rhs) <= 1e-8 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("word matrices at an order-two h agree with the alternating form") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  riley::ExponentWord w({2, -1, 3});
  Matrix2c f = Matrix2c::parabolic();
  for (int trial = 0; trial < 20; ++trial) {
    Complex z{u(rng), u(rng)};
    if (std::abs(z) < 0.1) continue;
    Matrix2c phi = riley::phi_generator(std::sqrt(z));
    Complex g1 = riley::gamma(f, riley::word_matrix(w, phi));
    Complex g2 = riley::gamma(f, riley::good_word_matrix(w, phi));
    CHECK(std::abs(g1 - g2) <= 1e-10 * std::max(1.0, std::abs(g1)));
  }
}
