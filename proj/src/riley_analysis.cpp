#include "riley/riley_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace riley {

namespace {

double rel_scale(Complex z) { return std::max(1.0, std::abs(z)); }

bool near_real(Complex z) { return std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z.real())); }
bool near_imag(Complex z) { return std::abs(z.real()) <= 1e-9 * std::max(1.0, std::abs(z.imag())); }

}  // namespace

const std::vector<Landmark>& landmark_table() {
  static const std::vector<Landmark> table = [] {
    std::vector<Landmark> t;
    double r3 = std::sqrt(3.0), r7 = std::sqrt(7.0);
    t.push_back({"figure_eight", {0.5, r3 / 2.0}, "figure-eight knot group, slope 5/3"});
    t.push_back({"whitehead", {1.0, 1.0}, "Whitehead link group, slope 8/3"});
    t.push_back({"link_10_3", {1.5, r3 / 2.0}, "two-bridge link of slope 10/3"});
    t.push_back({"link_12_5", {0.5, r7 / 2.0}, "two-bridge link of slope 12/5"});
    for (int p = 3; p <= 7; ++p) t.push_back(triangle_landmark(p));
    return t;
  }();
  return table;
}

Landmark triangle_landmark(int p) {
  if (p < 3) throw std::invalid_argument("triangle landmarks need p >= 3");
  double c = std::cos(std::numbers::pi / p);
  std::ostringstream name, desc;
  name << "triangle_" << p;
  desc << "(" << p << ",inf,inf) triangle group";
  return {name.str(), {-4.0 * c * c, 0.0}, desc.str()};
}

RegionCertificate classify_region(Complex z) {
  if (near_real(z)) {
    double a = std::abs(z.real());
    if (a > 4.0) return {RegionKind::certified_slice, "real axis, |z| > 4"};
    if (a > 0.0) return {RegionKind::certified_complement, "real axis, 0 < |z| <= 4"};
  }
  if (near_imag(z)) {
    double a = std::abs(z.imag());
    if (a > 2.0) return {RegionKind::certified_slice, "imaginary axis, |Im z| > 2"};
    if (a > 0.0) return {RegionKind::certified_complement, "imaginary axis, 0 < |Im z| <= 2"};
  }
  for (const Landmark& l : landmark_table())
    if (std::abs(z - l.z) <= 1e-12 * rel_scale(l.z))
      return {RegionKind::certified_complement, "landmark " + l.name};
  return {RegionKind::unknown, ""};
}

RegionCertificate certificate_from_cycle(const IntPolynomial& p, const Cycle& cycle) {
  if (cycle.points.empty()) throw std::invalid_argument("empty cycle");
  for (std::size_t i = 0; i < cycle.points.size(); ++i) {
    Complex next = cycle.points[(i + 1) % cycle.points.size()];
    Complex got = p.evaluate(cycle.points[i]);
    if (std::abs(got - next) > 1e-9 * rel_scale(next))
      throw std::invalid_argument("cycle fails validation under the polynomial");
  }
  std::ostringstream witness;
  witness << "bounded cycle of period " << cycle.period << " of " << p.to_string();
  return {RegionKind::certified_complement, witness.str()};
}

ScreenResult sl_screen(Complex z) {
  if (z == Complex(0.0)) throw std::invalid_argument("sl_screen rejects z = 0 (reducible case)");
  ScreenResult result;
  result.z0 = z;
  if (std::abs(z) >= 1.0) return result;  // one-sided screen
  result.certified = true;

  const ExponentWord squaring(std::vector<std::int64_t>{1});
  ExponentWord chain_word = squaring;
  Complex v = z;
  result.trace_chain.push_back(v);
  // word lengths double each step; keep the explicit chain to a sane size.
  // word_chain[k] is the squaring word whose polynomial sends z to
  // trace_chain[k+1].
  constexpr std::size_t kMaxStoredWordLength = 1u << 15;
  for (int k = 0; k < 64; ++k) {
    v = v * v;
    result.trace_chain.push_back(v);
    if (result.word_chain.empty()) {
      result.word_chain.push_back(chain_word);
    } else if (star(squaring, chain_word).size() <= kMaxStoredWordLength) {
      chain_word = star(squaring, chain_word);
      result.word_chain.push_back(chain_word);
    } else {
      result.word_chain_truncated = true;
    }
    if (std::abs(v) < 1e-15) break;
  }
  return result;
}

RootAudit root_location_audit(const ExponentWord& word) {
  RootAudit audit{word, word_polynomial(word), {}, {}, true};
  audit.roots = roots(audit.poly);
  for (Complex r : audit.roots) {
    audit.moduli.push_back(std::abs(r));
    if (classify_region(r).kind == RegionKind::certified_slice) audit.pass = false;
  }
  return audit;
}

namespace {

struct Candidate {
  double distance = std::numeric_limits<double>::infinity();
  Complex zeta{};
  std::size_t word_index = static_cast<std::size_t>(-1);
};

Candidate best_preimage(const std::vector<ExponentWord>& words, std::size_t begin, std::size_t end,
                        Complex z0, Complex lambda) {
  Candidate best;
  for (std::size_t i = begin; i < end; ++i) {
    IntPolynomial p = word_polynomial(words[i]);
    for (Complex zeta : preimages(p, z0)) {
      if (zeta == Complex(0.0)) continue;  // phi needs a nonzero square root
      double d = std::abs(zeta - lambda);
      if (d < best.distance || (d == best.distance && i < best.word_index)) {
        best = {d, zeta, i};
      }
    }
  }
  return best;
}

}  // namespace

WitnessReport supergroup_witness(Complex z0, Complex lambda, const WitnessBudget& budget,
                                 int threads) {
  if (z0 == Complex(0.0)) throw std::invalid_argument("supergroup witness requires z0 != 0");
  std::vector<ExponentWord> words = enumerate_words(budget.max_len, budget.max_exp, budget.limit);
  if (words.empty()) throw std::invalid_argument("empty witness budget");

  int nthreads = std::clamp(threads, 1, 64);
  Candidate best;
  if (nthreads == 1 || words.size() < 64) {
    best = best_preimage(words, 0, words.size(), z0, lambda);
  } else {
    std::vector<Candidate> partial(static_cast<std::size_t>(nthreads));
    std::vector<std::thread> pool;
    std::size_t chunk = (words.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      std::size_t b = t * chunk, e = std::min(words.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, t, b, e] { partial[static_cast<std::size_t>(t)] = best_preimage(words, b, e, z0, lambda); });
    }
    for (auto& th : pool) th.join();
    for (const Candidate& c : partial) {
      if (c.distance < best.distance ||
          (c.distance == best.distance && c.word_index < best.word_index))
        best = c;
    }
  }

  WitnessReport report{.target = z0,
                       .lambda = lambda,
                       .word = words[best.word_index],
                       .zeta = best.zeta,
                       .distance = best.distance,
                       .words_searched = words.size()};

  Matrix2c f = Matrix2c::parabolic();
  auto character_residual = [&](Complex sqrt_zeta) {
    Matrix2c w = word_matrix(report.word, phi_generator(sqrt_zeta));
    Matrix2c g = w * f * w.inverse_unimodular();
    PrincipalCharacter ch = principal_character(f, g);
    double resid = std::abs(ch.gamma - z0 * z0);
    resid = std::max(resid, std::abs(ch.beta_a));
    resid = std::max(resid, std::abs(ch.beta_b));
    return resid;
  };
  Complex s = std::sqrt(report.zeta);
  double r_main = character_residual(s);
  double r_other = character_residual(-s);
  report.residual = r_main;
  report.branch_difference = std::abs(r_main - r_other);
  // W f W^-1 carries two copies of w's phi-letters: even count, structurally
  report.parity_even = (2 * (report.word.size() + 1)) % 2 == 0;
  double preimage_err = std::abs(word_polynomial(report.word).evaluate(report.zeta) - z0);
  report.accepted = report.parity_even && report.residual <= 1e-9 &&
                    report.branch_difference <= 2e-9 &&
                    preimage_err <= 1e-9 * rel_scale(z0);
  return report;
}

NielsenReport nielsen_witness(const ExponentWord& word, int n_classes, std::size_t degree_cap) {
  if (n_classes < 1) throw std::invalid_argument("nielsen_witness requires N >= 1");
  NielsenReport report{.word = word,
                       .requested_classes = n_classes,
                       .period = 2 * n_classes,
                       .cycles = {},
                       .cycle_found = false,
                       .matrix_residual = 0.0};

  IntPolynomial p = word_polynomial(word);
  if (p.degree() < 2) throw std::invalid_argument("nielsen_witness requires degree >= 2");

  std::vector<Cycle> all = periodic_points(p, report.period, degree_cap);
  for (Cycle& c : all) {
    if (c.period != report.period) continue;
    NielsenCycle nc;
    nc.cycle = c;
    for (Complex gz : c.points) nc.gamma_squares.push_back(gz * gz);
    // count distinct values at 1e-8 separation
    std::vector<Complex> reps;
    for (Complex v : nc.gamma_squares) {
      bool fresh = true;
      for (Complex r : reps)
        if (std::abs(v - r) < 1e-8) fresh = false;
      if (fresh) reps.push_back(v);
    }
    nc.distinct_count = static_cast<int>(reps.size());
    nc.achieves = nc.distinct_count >= n_classes;
    report.cycles.push_back(std::move(nc));
  }
  report.cycle_found = !report.cycles.empty();

  if (report.cycle_found) {
    // star-power trace identity on one cycle point: the i-fold star power of
    // the word must reproduce the i-th polynomial iterate
    Complex g0 = report.cycles.front().cycle.points.front();
    Matrix2c phi = phi_generator(std::sqrt(g0));
    Matrix2c f = Matrix2c::parabolic();
    Complex iterate = g0;
    double worst = 0.0;
    for (int i = 1; i <= report.period; ++i) {
      iterate = p.evaluate(iterate);
      ExponentWord wi = star_power(word, i);
      Complex got = gamma(f, word_matrix(wi, phi));
      worst = std::max(worst, std::abs(got - iterate) / rel_scale(iterate));
    }
    report.matrix_residual = worst;
  }
  return report;
}

namespace {

std::optional<NonfreeCertificate> nonfree_search(Complex z, const WitnessBudget& budget) {
  WordEnumerator en(budget.max_len, budget.max_exp);
  std::size_t seen = 0;
  Matrix2c f = Matrix2c::parabolic();
  Matrix2c phi = phi_generator(std::sqrt(z));
  while (seen < budget.limit) {
    auto w = en.next();
    if (!w) break;
    ++seen;
    IntPolynomial p = word_polynomial(*w);
    Complex val = p.evaluate(z);
    if (std::abs(val - z) > 1e-9 * rel_scale(z)) continue;
    double trace_residual = std::abs(gamma(f, word_matrix(*w, phi)) - z);
    if (trace_residual <= 1e-9 * rel_scale(z))
      return NonfreeCertificate{*w, val, std::abs(val - z), trace_residual};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonfreeCertificate> nonfree_certificate(Complex z, const WitnessBudget& budget) {
  if (z == Complex(0.0)) throw std::invalid_argument("nonfree certificate requires z != 0");
  return nonfree_search(z, budget);
}

}  // namespace riley
