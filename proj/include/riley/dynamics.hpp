#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "riley/int_polynomial.hpp"
#include "riley/moebius.hpp"
#include "riley/words.hpp"

namespace riley {

/// All roots with multiplicity, sorted by (re, im).  Exact powers of z are
/// split off first, the rest go through Aberth-Ehrlich simultaneous
/// iteration from the Cauchy-bound circle with Newton polishing; roots
/// closer than 1e-5 (relative) are clustered and reported as one centroid
/// with multiplicity.  Requires degree >= 1.
std::vector<Complex> roots(const IntPolynomial& p);

/// Roots of p - target.
std::vector<Complex> preimages(const IntPolynomial& p, Complex target);

/// |p(r)| divided by max|coeff| * max(1,|r|)^deg, evaluated in double-double
/// and combined in log space.  The solver contract bounds this ratio by 1e-10.
double root_residual_ratio(const IntPolynomial& p, Complex r);

/// Finite sample of the word-polynomial semigroroup used as a dynamical system.
struct PolynomialSystem {
  struct Generator {
    ExponentWord word;
    IntPolynomial poly;
  };
  std::vector<Generator> generators;

  static PolynomialSystem from_words(const std::vector<ExponentWord>& words);
};

/// Backward-orbit sample: points plus the generator index and depth that
/// produced each point.  Points are deduplicated at 1e-9 spacing.
struct PointCloud {
  std::vector<Complex> points;
  std::vector<std::uint32_t> generator_index;
  std::vector<std::uint32_t> depth;
  std::uint64_t failed_samples = 0;
};

/// Chaos game on inverse branches: from target, repeatedly pick a uniformly
/// random generator and a uniformly random preimage branch.  The first
/// burn_in states are discarded.  Deterministic for a fixed seed.  Failed
/// root solves skip the sample and are counted.
PointCloud backward_orbit(const PolynomialSystem& sys, Complex target, std::size_t samples,
                          std::uint64_t seed, std::size_t burn_in = 20);

struct Cycle {
  std::vector<Complex> points;
  int period = 0;
};

/// All cycles among the roots of p^(n)(z) - z, grouped by minimal period
/// (which divides n), deduplicated up to rotation.  The minimal-period test
/// is numeric at threshold 1e-6.  Rejects (deg p)^n beyond degree_cap.
std::vector<Cycle> periodic_points(const IntPolynomial& p, int n, std::size_t degree_cap = 243);

struct Orbit {
  std::vector<Complex> points;  // z0, p(z0), ..., truncated on escape
  bool escaped = false;
  bool eventually_periodic = false;
  int preperiod = 0;  // valid when eventually_periodic
  int period = 0;
};

/// Forward orbit of length n+1 with revisit detection at 1e-9 and escape
/// truncation at |z| > 1e150.
Orbit iterate_orbit(const IntPolynomial& p, Complex z0, int n);

struct RasterWindow {
  double re_min, re_max, im_min, im_max;
};

struct Raster {
  RasterWindow window{};
  int width = 0, height = 0;
  std::uint32_t max_iter = 0;
  double bailout = 0.0;
  // row-major, row 0 at im_min; first iteration exceeding bailout, 0 if none
  std::vector<std::uint32_t> data;

  Complex pixel_center(int x, int y) const;
  std::uint32_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// 1 + sum |coefficients|: a certified escape radius for integer polynomials
/// of degree >= 2.
double escape_radius(const IntPolynomial& p);

/// Escape-time raster over pixel centers; deterministic, parallel over rows.
Raster escape_raster(const IntPolynomial& p, const RasterWindow& window, int width, int height,
                     std::uint32_t max_iter, double bailout, int threads = 1);

/// Centers of pixels whose 3x3 neighbourhood contains both an escaping and a
/// non-escaping pixel.
std::vector<Complex> boundary_points(const Raster& r);

double directed_hausdorff(const std::vector<Complex>& from, const std::vector<Complex>& to);
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace riley
