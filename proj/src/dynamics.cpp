#include "riley/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "riley/dd.hpp"

namespace riley {

namespace {

using detail::CDD;
using detail::DD;

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Integer coefficients converted with an exact power-of-two scaling that puts
// the largest magnitude near 1.  Keeps ~106 bits of each coefficient.
struct Prepared {
  std::vector<CDD> c;        // scaled, ascending, leading nonzero
  std::vector<Complex> cd;   // hi parts
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

double ldexp_chunked(double x, long e) {
  while (e < -900) {
    x = std::ldexp(x, -900);
    e += 900;
  }
  return std::ldexp(x, static_cast<int>(e));
}

Prepared prepare(const std::vector<Integer>& coeffs, Complex shift_constant = 0.0) {
  long max_bits = 0;
  for (const auto& v : coeffs)
    if (v != 0) max_bits = std::max(max_bits, static_cast<long>(msb(abs(v))) + 1);

  long pre_shift = max_bits > 900 ? max_bits - 900 : 0;
  long post = (max_bits - pre_shift) > 1 ? (max_bits - pre_shift) - 1 : 0;

  Prepared out;
  out.c.reserve(coeffs.size());
  for (const auto& v : coeffs) {
    DD d{};
    if (v != 0) {
      Integer top = pre_shift > 0 ? Integer(v >> pre_shift) : v;
      double hi = top.convert_to<double>();
      Integer rem = top - Integer(hi);
      double lo = rem.convert_to<double>();
      d = detail::quick_two_sum(std::ldexp(hi, -static_cast<int>(post)),
                                std::ldexp(lo, -static_cast<int>(post)));
    }
    out.c.push_back({d, detail::dd_from(0.0)});
  }
  if (shift_constant != 0.0) {
    double sre = ldexp_chunked(shift_constant.real(), -(pre_shift + post));
    double sim = ldexp_chunked(shift_constant.imag(), -(pre_shift + post));
    out.c[0] = detail::cdd_add(out.c[0], {detail::dd_from(-sre), detail::dd_from(-sim)});
  }
  while (out.c.size() > 1) {
    Complex lead = detail::cdd_to_complex(out.c.back());
    if (lead != Complex(0.0)) break;
    out.c.pop_back();
  }
  out.cd.reserve(out.c.size());
  for (const auto& cc : out.c) out.cd.push_back(detail::cdd_to_complex(cc));
  return out;
}

struct EvalResult {
  Complex p;
  Complex dp;
  double majorant;  // sum |a_i| |z|^i, the backward-error scale
};

EvalResult horner(const std::vector<Complex>& a, Complex z) {
  Complex p = a.back(), dp = 0.0;
  double az = std::abs(z), maj = std::abs(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    maj = maj * az + std::abs(a[i]);
  }
  return {p, dp, maj};
}

Complex horner_dd(const std::vector<CDD>& a, Complex z) {
  CDD zz = detail::cdd_from(z);
  CDD p = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) p = detail::cdd_add(detail::cdd_mul(p, zz), a[i]);
  return detail::cdd_to_complex(p);
}

// Aberth-Ehrlich on the prepared coefficients; returns deg roots with
// multiplicity (clusters merged to centroids), sorted by (re, im).
std::vector<Complex> solve_prepared(const Prepared& P) {
  const int n = P.degree();
  const auto& a = P.cd;
  if (n < 1) throw std::invalid_argument("root solve requires degree >= 1");
  if (n == 1) return {-(a[0] / a[1])};

  const bool use_dd = n > 50;

  // Initial guesses from the Newton polygon: the upper convex hull of
  // (i, log|a_i|) splits the degree into bands, and each hull edge supplies
  // a circle whose radius tracks the magnitude of the roots in its band.
  // A single Cauchy-bound circle overflows badly for iterated polynomials,
  // whose interior coefficients dwarf the monic leading one.
  std::vector<std::pair<int, double>> support;
  for (int i = 0; i <= n; ++i)
    if (a[i] != Complex(0.0)) support.emplace_back(i, std::log(std::abs(a[i])));
  if (support.size() == 1) return std::vector<Complex>(static_cast<std::size_t>(n), Complex(0.0));

  std::vector<std::pair<int, double>> hull;
  for (const auto& pt : support) {
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull[hull.size() - 1];
      double cross = (x2 - x1) * (pt.second - y1) - (y2 - y1) * (pt.first - x1);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  std::vector<Complex> z(static_cast<std::size_t>(n));
  int idx = 0;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    auto [k1, y1] = hull[e];
    auto [k2, y2] = hull[e + 1];
    int band = k2 - k1;
    double radius = std::exp((y1 - y2) / band);
    for (int t = 0; t < band && idx < n; ++t, ++idx) {
      double theta = 2.0 * std::numbers::pi * t / band + 0.45 + 0.25 * static_cast<double>(e);
      z[static_cast<std::size_t>(idx)] = radius * Complex(std::cos(theta), std::sin(theta));
    }
  }
  for (; idx < n; ++idx)  // degenerate hulls: fall back to the unit circle
    z[static_cast<std::size_t>(idx)] =
        Complex(std::cos(0.45 + idx), std::sin(0.45 + idx));

  std::vector<char> converged(static_cast<std::size_t>(n), 0);
  const int max_sweeps = 800;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_done = true;
    for (int j = 0; j < n; ++j) {
      if (converged[static_cast<std::size_t>(j)]) continue;
      EvalResult e = horner(a, z[j]);
      Complex pval = use_dd ? horner_dd(P.c, z[j]) : e.p;
      if (std::abs(pval) <= 4.0 * kEps * e.majorant) {
        converged[static_cast<std::size_t>(j)] = 1;
        continue;
      }
      Complex newton = pval / e.dp;
      if (!finite(newton)) {
        z[j] *= Complex(1.0 + 1e-6, 1e-6);
        all_done = false;
        continue;
      }
      Complex repulsion = 0.0;
      for (int k = 0; k < n; ++k)
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      Complex denom = 1.0 - newton * repulsion;
      Complex step = denom == Complex(0.0) ? newton : newton / denom;
      if (!finite(step)) step = newton;
      z[j] -= step;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z[j])))
        converged[static_cast<std::size_t>(j)] = 1;
      else
        all_done = false;
    }
    if (all_done) break;
  }

  // cluster multiple roots: union-find over pairs within 1e-5 relative
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) parent[static_cast<std::size_t>(j)] = j;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double thr = 1e-5 * std::max(1.0, std::max(std::abs(z[i]), std::abs(z[j])));
      if (std::abs(z[i] - z[j]) <= thr) parent[static_cast<std::size_t>(find(i))] = find(j);
    }

  std::unordered_map<int, std::vector<int>> clusters;
  for (int j = 0; j < n; ++j) clusters[find(j)].push_back(j);

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (auto& [root_id, members] : clusters) {
    if (members.size() == 1) {
      // Newton polish, double-double residual
      Complex w = z[static_cast<std::size_t>(members[0])];
      for (int it = 0; it < 3; ++it) {
        EvalResult e = horner(a, w);
        Complex pval = horner_dd(P.c, w);
        if (std::abs(pval) <= 2.0 * kEps * e.majorant) break;
        Complex step = pval / e.dp;
        if (!finite(step)) break;
        w -= step;
      }
      out.push_back(w);
    } else {
      Complex centroid = 0.0;
      for (int m : members) centroid += z[static_cast<std::size_t>(m)];
      centroid /= static_cast<double>(members.size());
      for (std::size_t m = 0; m < members.size(); ++m) out.push_back(centroid);
    }
  }
  std::sort(out.begin(), out.end(), [](Complex l, Complex r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return out;
}

std::vector<double> coefficients_as_double(const IntPolynomial& p) {
  std::vector<double> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    double v = c.convert_to<double>();
    if (!std::isfinite(v))
      throw std::invalid_argument("polynomial coefficients exceed double range");
    out.push_back(v);
  }
  return out;
}

Complex eval_double(const std::vector<double>& c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace

std::vector<Complex> roots(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("roots requires a polynomial of degree >= 1");
  std::size_t zeros = p.trailing_zeros();
  std::vector<Complex> out(zeros, Complex(0.0));
  IntPolynomial q = p.divided_by_power(zeros);
  if (!q.is_zero() && q.degree() >= 1) {
    auto rest = solve_prepared(prepare(q.coefficients()));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end(), [](Complex l, Complex r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return out;
}

std::vector<Complex> preimages(const IntPolynomial& p, Complex target) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("preimages requires a polynomial of degree >= 1");
  if (!finite(target)) throw std::invalid_argument("preimages target must be finite");
  if (target == Complex(0.0)) return roots(p);
  return solve_prepared(prepare(p.coefficients(), target));
}

double root_residual_ratio(const IntPolynomial& p, Complex r) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("root_residual_ratio requires degree >= 1");
  Prepared prep = prepare(p.coefficients());
  double num = std::abs(horner_dd(prep.c, r));
  double cmax = 0.0;
  for (const auto& c : prep.cd) cmax = std::max(cmax, std::abs(c));
  double log_den = std::log(cmax) + static_cast<double>(p.degree()) * std::log(std::max(1.0, std::abs(r)));
  if (num == 0.0) return 0.0;
  return std::exp(std::log(num) - log_den);
}

PolynomialSystem PolynomialSystem::from_words(const std::vector<ExponentWord>& words) {
  if (words.empty()) throw std::invalid_argument("polynomial system needs at least one word");
  PolynomialSystem sys;
  for (const auto& w : words) {
    IntPolynomial p = word_polynomial(w);
    if (p.degree() < 2)
      throw std::invalid_argument("dynamics requires generators of degree >= 2");
    sys.generators.push_back({w, std::move(p)});
  }
  return sys;
}

namespace {

// Deduplication grid at 1e-9 spacing.
class DedupGrid {
 public:
  bool insert(Complex z) {
    long long qx = std::llround(z.real() * 1e9);
    long long qy = std::llround(z.imag() * 1e9);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(qx + dx, qy + dy));
        if (it == cells_.end()) continue;
        for (Complex w : it->second)
          if (std::abs(w - z) <= 1e-9) return false;
      }
    cells_[key(qx, qy)].push_back(z);
    return true;
  }

 private:
  static std::uint64_t key(long long x, long long y) {
    return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(y);
  }
  std::unordered_map<std::uint64_t, std::vector<Complex>> cells_;
};

}  // namespace

PointCloud backward_orbit(const PolynomialSystem& sys, Complex target, std::size_t samples,
                          std::uint64_t seed, std::size_t burn_in) {
  if (samples < 1) throw std::invalid_argument("backward_orbit requires samples >= 1");
  if (sys.generators.empty()) throw std::invalid_argument("backward_orbit requires generators");
  if (!finite(target)) throw std::invalid_argument("backward_orbit target must be finite");
  bool has_expanding = false;
  for (const auto& g : sys.generators)
    if (!g.poly.is_zero() && g.poly.degree() >= 2) has_expanding = true;
  if (!has_expanding)
    throw std::invalid_argument("backward_orbit requires a generator of degree >= 2");

  std::mt19937_64 rng(seed);
  PointCloud cloud;
  DedupGrid grid;
  Complex state = target;
  const std::size_t total = samples + burn_in;
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t gi = static_cast<std::size_t>(rng() % sys.generators.size());
    std::vector<Complex> pre;
    try {
      pre = preimages(sys.generators[gi].poly, state);
    } catch (const std::exception&) {
      ++cloud.failed_samples;
      continue;
    }
    Complex next = pre[static_cast<std::size_t>(rng() % pre.size())];
    if (!finite(next)) {
      ++cloud.failed_samples;
      continue;
    }
    state = next;
    if (k < burn_in) continue;
    if (grid.insert(state)) {
      cloud.points.push_back(state);
      cloud.generator_index.push_back(static_cast<std::uint32_t>(gi));
      cloud.depth.push_back(static_cast<std::uint32_t>(k));
    }
  }
  return cloud;
}

std::vector<Cycle> periodic_points(const IntPolynomial& p, int n, std::size_t degree_cap) {
  if (p.is_zero() || p.degree() < 2)
    throw std::invalid_argument("periodic_points requires degree >= 2");
  if (n < 1) throw std::invalid_argument("periodic_points requires n >= 1");
  std::size_t total_degree = 1;
  for (int i = 0; i < n; ++i) {
    total_degree *= p.degree();
    if (total_degree > degree_cap)
      throw std::invalid_argument("periodic_points: (deg p)^n = " + std::to_string(total_degree) +
                                  "+ exceeds the degree cap " + std::to_string(degree_cap));
  }

  IntPolynomial iterate = p;
  for (int i = 1; i < n; ++i) iterate = compose(p, iterate);
  IntPolynomial fixed_eq = iterate - IntPolynomial::identity();
  std::vector<Complex> rts = roots(fixed_eq);

  std::vector<double> pd = coefficients_as_double(p);
  auto apply = [&](Complex z, int times) {
    for (int i = 0; i < times; ++i) z = eval_double(pd, z);
    return z;
  };

  std::vector<char> visited(rts.size(), 0);
  auto mark_near = [&](Complex z) {
    for (std::size_t i = 0; i < rts.size(); ++i)
      if (!visited[i] && std::abs(rts[i] - z) <= 1e-6 * std::max(1.0, std::abs(z))) visited[i] = 1;
  };
  auto nearest_root = [&](Complex z) -> Complex {
    double best = std::numeric_limits<double>::infinity();
    Complex out = z;
    for (Complex r : rts) {
      double d = std::abs(r - z);
      if (d < best) {
        best = d;
        out = r;
      }
    }
    return best <= 1e-6 * std::max(1.0, std::abs(z)) ? out : z;
  };

  std::vector<Cycle> cycles;
  for (std::size_t i = 0; i < rts.size(); ++i) {
    if (visited[i]) continue;
    Complex z0 = rts[i];
    int period = n;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      if (std::abs(apply(z0, d) - z0) <= 1e-6 * std::max(1.0, std::abs(z0))) {
        period = d;
        break;
      }
    }
    Cycle cycle;
    cycle.period = period;
    Complex w = z0;
    for (int k = 0; k < period; ++k) {
      cycle.points.push_back(w);
      mark_near(w);
      w = nearest_root(eval_double(pd, w));
    }
    // canonical rotation: start at the lexicographically least point
    std::size_t start = 0;
    for (std::size_t k = 1; k < cycle.points.size(); ++k) {
      Complex a = cycle.points[k], b = cycle.points[start];
      if (a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag())) start = k;
    }
    std::rotate(cycle.points.begin(), cycle.points.begin() + static_cast<long>(start),
                cycle.points.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& l, const Cycle& r) {
    if (l.period != r.period) return l.period < r.period;
    Complex a = l.points.front(), b = r.points.front();
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return cycles;
}

Orbit iterate_orbit(const IntPolynomial& p, Complex z0, int n) {
  if (n < 0) throw std::invalid_argument("iterate_orbit requires n >= 0");
  if (p.is_zero()) throw std::invalid_argument("iterate_orbit requires a nonzero polynomial");
  std::vector<double> pd = coefficients_as_double(p);
  Orbit orbit;
  orbit.points.push_back(z0);
  Complex z = z0;
  for (int k = 1; k <= n; ++k) {
    z = eval_double(pd, z);
    if (!finite(z) || std::abs(z) > 1e150) {
      orbit.escaped = true;
      break;
    }
    if (!orbit.eventually_periodic) {
      for (std::size_t j = 0; j < orbit.points.size(); ++j) {
        if (std::abs(orbit.points[j] - z) <= 1e-9) {
          orbit.eventually_periodic = true;
          orbit.preperiod = static_cast<int>(j);
          orbit.period = k - static_cast<int>(j);
          break;
        }
      }
    }
    orbit.points.push_back(z);
  }
  return orbit;
}

Complex Raster::pixel_center(int x, int y) const {
  double re = window.re_min + (x + 0.5) * (window.re_max - window.re_min) / width;
  double im = window.im_min + (y + 0.5) * (window.im_max - window.im_min) / height;
  return {re, im};
}

double escape_radius(const IntPolynomial& p) {
  return 1.0 + p.sum_abs_coefficients().convert_to<double>();
}

Raster escape_raster(const IntPolynomial& p, const RasterWindow& window, int width, int height,
                     std::uint32_t max_iter, double bailout, int threads) {
  if (p.is_zero() || p.degree() < 2)
    throw std::invalid_argument("escape_raster requires degree >= 2");
  if (width < 1 || height < 1) throw std::invalid_argument("escape_raster requires positive size");
  if (window.re_min >= window.re_max || window.im_min >= window.im_max)
    throw std::invalid_argument("escape_raster window is empty");
  if (max_iter < 1) throw std::invalid_argument("escape_raster requires max_iter >= 1");
  if (bailout < escape_radius(p))
    throw std::invalid_argument("escape_raster bailout is below the certified escape radius");

  Raster r;
  r.window = window;
  r.width = width;
  r.height = height;
  r.max_iter = max_iter;
  r.bailout = bailout;
  r.data.assign(static_cast<std::size_t>(width) * height, 0);

  std::vector<double> pd = coefficients_as_double(p);
  double b2 = bailout * bailout;
  auto run_rows = [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y) {
      for (int x = 0; x < width; ++x) {
        Complex z = r.pixel_center(x, y);
        std::uint32_t count = 0;
        for (std::uint32_t k = 1; k <= max_iter; ++k) {
          z = eval_double(pd, z);
          if (z.real() * z.real() + z.imag() * z.imag() > b2) {
            count = k;
            break;
          }
        }
        r.data[static_cast<std::size_t>(y) * width + x] = count;
      }
    }
  };

  int nthreads = std::clamp(threads, 1, 64);
  if (nthreads == 1 || height < 2 * nthreads) {
    run_rows(0, height);
  } else {
    std::vector<std::thread> pool;
    int chunk = (height + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      int y0 = t * chunk, y1 = std::min(height, y0 + chunk);
      if (y0 >= y1) break;
      pool.emplace_back(run_rows, y0, y1);
    }
    for (auto& th : pool) th.join();
  }
  return r;
}

std::vector<Complex> boundary_points(const Raster& r) {
  std::vector<Complex> out;
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) {
      bool has_escaping = false, has_bounded = false;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= r.width || ny >= r.height) continue;
          (r.at(nx, ny) > 0 ? has_escaping : has_bounded) = true;
        }
      }
      if (has_escaping && has_bounded) out.push_back(r.pixel_center(x, y));
    }
  }
  return out;
}

double directed_hausdorff(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  if (from.empty() || to.empty())
    throw std::invalid_argument("hausdorff distance of an empty set is undefined");
  double worst = 0.0;
  for (Complex a : from) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex b : to) {
      double d = std::abs(a - b);
      if (d < best) best = d;
      if (best <= worst) break;  // cannot raise the supremum
    }
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace riley
