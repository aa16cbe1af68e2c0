#include "riley/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace riley {

namespace {

double max_entry(const Matrix2c& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)), std::max(std::abs(m.c), std::abs(m.d)));
}

}  // namespace

Complex gamma(const Matrix2c& x, const Matrix2c& y) {
  Matrix2c commutator = x * y * x.inverse_unimodular() * y.inverse_unimodular();
  return commutator.trace() - 2.0;
}

Complex beta(const Matrix2c& x) {
  Complex t = x.trace();
  return t * t - 4.0;
}

PrincipalCharacter principal_character(const Matrix2c& x, const Matrix2c& y) {
  return {gamma(x, y), beta(x), beta(y)};
}

Matrix2c phi_generator(Complex sqrt_z) {
  if (sqrt_z == Complex(0.0)) throw std::invalid_argument("phi_generator requires sqrt_z != 0");
  return {0.0, -1.0 / sqrt_z, sqrt_z, 0.0};
}

Matrix2c word_matrix(const ExponentWord& s, const Matrix2c& h) {
  Matrix2c w = h;
  for (std::int64_t e : s) {
    w = w * Matrix2c::parabolic_power(e);
    w = w * h;
  }
  return w;
}

Matrix2c good_word_matrix(const ExponentWord& s, const Matrix2c& h) {
  Matrix2c hinv = h.inverse_unimodular();
  Matrix2c w = h;
  bool inverted = true;
  for (std::int64_t e : s) {
    w = w * Matrix2c::parabolic_power(e);
    w = w * (inverted ? hinv : h);
    inverted = !inverted;
  }
  return w;
}

Matrix2c psi_involution(const Matrix2c& h) {
  if (std::abs(h.c) <= 1e-12)
    throw std::invalid_argument("psi_involution: lower-left entry vanishes (reducible case)");
  Complex a = h.a, c = h.c;
  return {a, -(1.0 + a * a) / c, c, -a};
}

std::pair<Matrix2c, Matrix2c> z2_extend(const Matrix2c& f_in, const Matrix2c& h_in) {
  // normalize the representative sign so the parabolic has trace +2
  Matrix2c f = f_in;
  if (std::abs(f.trace() + 2.0) < std::abs(f.trace() - 2.0)) f = -f;
  double scale = std::max(1.0, max_entry(f));
  if (std::abs(beta(f)) > 1e-9 * scale * scale)
    throw std::invalid_argument("z2_extend: first generator is not parabolic");
  if (std::abs(f.b) < 1e-14 * scale && std::abs(f.c) < 1e-14 * scale)
    throw std::invalid_argument("z2_extend: first generator is the identity");

  // conjugator alpha with alpha f alpha^-1 = [[1,1],[0,1]]
  Matrix2c alpha;
  if (std::abs(f.c) > 1e-14 * scale) {
    // send the parabolic fixed point (a-d)/(2c) to infinity
    Complex p = (f.a - f.d) / (2.0 * f.c);
    alpha = Matrix2c{0.0, 1.0, -1.0, p};
  } else {
    alpha = Matrix2c::identity();
  }
  Matrix2c f1 = alpha * f * alpha.inverse_unimodular();
  // now upper triangular [[1, tau], [0, 1]]; rescale tau to 1
  Complex tau = f1.b / f1.a;
  Complex dsc = 1.0 / std::sqrt(tau);
  Matrix2c diag{dsc, 0.0, 0.0, 1.0 / dsc};
  alpha = diag * alpha;

  Matrix2c h1 = alpha * h_in * alpha.inverse_unimodular();
  if (std::abs(h1.c) <= 1e-12)
    throw std::invalid_argument("z2_extend: gamma(f, h) vanishes (reducible pair)");
  Matrix2c psi1 = psi_involution(h1);
  Matrix2c psi = alpha.inverse_unimodular() * psi1 * alpha;
  return {f_in, psi};
}

ParabolicPair make_parabolic_pair(Complex z) {
  ParabolicPair pair;
  pair.z = z;
  pair.f = Matrix2c::parabolic();
  pair.g = Matrix2c{1.0, 0.0, z, 1.0};
  return pair;
}

}  // namespace riley
