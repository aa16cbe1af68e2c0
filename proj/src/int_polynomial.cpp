#include "riley/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace riley {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::identity() { return monomial(1); }

IntPolynomial IntPolynomial::monomial(std::size_t k, Integer c) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, Integer(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

std::size_t IntPolynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const Integer& IntPolynomial::leading_coefficient() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return IntPolynomial::zero();
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero();
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Integer(i);
  return IntPolynomial(std::move(out));
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + it->convert_to<double>();
  return acc;
}

Integer IntPolynomial::sum_abs_coefficients() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

Integer IntPolynomial::max_abs_coefficient() const {
  Integer m = 0;
  for (const auto& c : coeffs_) {
    Integer a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::size_t IntPolynomial::trailing_zeros() const {
  if (is_zero()) throw std::logic_error("trailing_zeros of the zero polynomial is undefined");
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

IntPolynomial IntPolynomial::divided_by_power(std::size_t k) const {
  if (k == 0) return *this;
  if (is_zero()) return zero();
  if (trailing_zeros() < k) throw std::invalid_argument("polynomial not divisible by z^k");
  return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q) {
  // Horner on the outer polynomial.
  IntPolynomial acc = IntPolynomial::zero();
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * q + IntPolynomial::constant(c[i]);
  }
  return acc;
}

}  // namespace riley
