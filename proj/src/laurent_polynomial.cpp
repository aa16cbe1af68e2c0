#include "riley/laurent_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace riley {

LaurentPolynomial::LaurentPolynomial(std::int64_t min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

LaurentPolynomial LaurentPolynomial::constant(Integer c) {
  return monomial(0, std::move(c));
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exp, Integer c) {
  LaurentPolynomial l;
  if (c != 0) {
    l.min_exp_ = exp;
    l.coeffs_.push_back(std::move(c));
  }
  return l;
}

bool LaurentPolynomial::is_one() const {
  return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1;
}

std::int64_t LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw std::logic_error("zero Laurent polynomial has no exponent range");
  return min_exp_;
}

std::int64_t LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw std::logic_error("zero Laurent polynomial has no exponent range");
  return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Integer LaurentPolynomial::coefficient(std::int64_t exp) const {
  if (is_zero() || exp < min_exp_) return 0;
  std::size_t idx = static_cast<std::size_t>(exp - min_exp_);
  return idx < coeffs_.size() ? coeffs_[idx] : Integer(0);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial operator+(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  std::int64_t lo = std::min(lhs.min_exp_, rhs.min_exp_);
  std::int64_t hi = std::max(lhs.max_exponent(), rhs.max_exponent());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(lhs.min_exp_ - lo) + i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(rhs.min_exp_ - lo) + i] += rhs.coeffs_[i];
  return LaurentPolynomial(lo, std::move(out));
}

LaurentPolynomial operator-(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  return lhs + (-rhs);
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return LaurentPolynomial::zero();
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return LaurentPolynomial(lhs.min_exp_ + rhs.min_exp_, std::move(out));
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "s";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

IntPolynomial to_z_polynomial(const LaurentPolynomial& l) {
  if (l.is_zero()) return IntPolynomial::zero();
  if (l.min_exponent() < 0)
    throw std::domain_error("Laurent polynomial has a negative exponent; not a polynomial in z");
  std::vector<Integer> out(static_cast<std::size_t>(l.max_exponent() / 2 + 1), Integer(0));
  for (std::int64_t e = l.min_exponent(); e <= l.max_exponent(); ++e) {
    Integer c = l.coefficient(e);
    if (c == 0) continue;
    if (e % 2 != 0)
      throw std::domain_error("Laurent polynomial has an odd exponent; not a polynomial in z = s^2");
    out[static_cast<std::size_t>(e / 2)] = std::move(c);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace riley
