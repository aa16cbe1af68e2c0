#pragma once

#include <cmath>
#include <complex>

namespace riley::detail {

// Double-double arithmetic (error-free transformations with FMA).  Used to
// evaluate high-degree polynomials whose plain-double Horner loop would lose
// the residual to cancellation.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, {-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_from(double x) { return {x, 0.0}; }

struct CDD {
  DD re, im;
};

inline CDD cdd_from(std::complex<double> z) { return {dd_from(z.real()), dd_from(z.imag())}; }

inline std::complex<double> cdd_to_complex(CDD z) {
  return {z.re.hi + z.re.lo, z.im.hi + z.im.lo};
}

inline CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline CDD cdd_mul(CDD a, CDD b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

}  // namespace riley::detail
