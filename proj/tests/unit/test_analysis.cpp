#include <doctest.h>

#include <cmath>

#include "riley/riley_analysis.hpp"

using riley::Complex;
using riley::ExponentWord;
using riley::RegionKind;

namespace {

const std::vector<ExponentWord>& reference_words() {
  static const std::vector<ExponentWord> words = {
      ExponentWord({1}),        ExponentWord({2}),     ExponentWord({1, 1}),
      ExponentWord({1, -1}),    ExponentWord({1, 2}),  ExponentWord({2, 2}),
      ExponentWord({1, 1, 1}),  ExponentWord({3, -3, 3}),
      ExponentWord({2, 3, 3}),  ExponentWord({3, 3, 2}),
  };
  return words;
}

}  // namespace

TEST_CASE("landmark values") {
  const auto& table = riley::landmark_table();
  auto find = [&](const std::string& name) {
    for (const auto& l : table)
      if (l.name == name) return l.z;
    FAIL("missing landmark ", name);
    return Complex{};
  };
  double r3 = std::sqrt(3.0), r7 = std::sqrt(7.0);
  CHECK(find("figure_eight") == Complex(0.5, r3 / 2.0));
  CHECK(find("whitehead") == Complex(1.0, 1.0));
  CHECK(find("link_10_3") == Complex(1.5, r3 / 2.0));
  CHECK(find("link_12_5") == Complex(0.5, r7 / 2.0));
  CHECK(std::abs(find("triangle_3") - Complex(-1.0, 0.0)) <= 1e-14);
  CHECK(std::abs(find("triangle_4") - Complex(-2.0, 0.0)) <= 1e-14);
  CHECK(std::abs(find("triangle_6") - Complex(-3.0, 0.0)) <= 1e-14);
  CHECK(std::abs(riley::triangle_landmark(12).z.real() + 4.0 * std::pow(std::cos(std::numbers::pi / 12), 2)) <= 1e-14);
  CHECK_THROWS_AS(riley::triangle_landmark(2), std::invalid_argument);
}

TEST_CASE("region classification") {
  auto kind = [](Complex z) { return riley::classify_region(z).kind; };
  CHECK(kind({5.0, 0.0}) == RegionKind::certified_slice);
  CHECK(kind({-4.5, 0.0}) == RegionKind::certified_slice);
  CHECK(kind({0.0, 3.0}) == RegionKind::certified_slice);
  CHECK(kind({0.0, -2.5}) == RegionKind::certified_slice);
  CHECK(kind({3.9, 0.0}) == RegionKind::certified_complement);
  CHECK(kind({4.0, 0.0}) == RegionKind::certified_complement);
  CHECK(kind({-0.5, 0.0}) == RegionKind::certified_complement);
  CHECK(kind({0.0, 1.5}) == RegionKind::certified_complement);
  CHECK(kind({0.0, 2.0}) == RegionKind::certified_complement);
  CHECK(kind({0.5, std::sqrt(3.0) / 2.0}) == RegionKind::certified_complement);  // landmark
  CHECK(kind({1.5, 0.5}) == RegionKind::unknown);
  CHECK(kind({0.0, 0.0}) == RegionKind::unknown);
}

TEST_CASE("certificates are mutually exclusive along the axes") {
  for (double t = -6.0; t <= 6.0; t += 0.1) {
    for (Complex z : {Complex(t, 0.0), Complex(0.0, t)}) {
      auto cert = riley::classify_region(z);
      bool in_slice_set = (z.imag() == 0.0 && std::abs(z.real()) > 4.0) ||
                          (z.real() == 0.0 && z.imag() != 0.0 && std::abs(z.imag()) > 2.0);
      if (cert.kind == RegionKind::certified_slice) CHECK(in_slice_set);
      if (cert.kind == RegionKind::certified_complement) CHECK(!in_slice_set);
    }
  }
}

TEST_CASE("cycle certificates") {
  riley::IntPolynomial p = word_polynomial(ExponentWord({1, 1}));
  double r3 = std::sqrt(3.0);
  riley::Cycle good{{{0.5, r3 / 2.0}, {0.5, -r3 / 2.0}}, 2};
  auto cert = riley::certificate_from_cycle(p, good);
  CHECK(cert.kind == RegionKind::certified_complement);
  riley::Cycle bad{{{0.5, 0.7}, {0.5, -0.7}}, 2};
  CHECK_THROWS_AS(riley::certificate_from_cycle(p, bad), std::invalid_argument);
}

TEST_CASE("squaring screen") {
  auto res = riley::sl_screen({0.5, 0.0});
  CHECK(res.certified);
  REQUIRE(res.trace_chain.size() >= 3);
  CHECK(std::abs(res.trace_chain[0] - 0.5) == 0.0);
  CHECK(std::abs(res.trace_chain[1] - 0.25) == 0.0);
  CHECK(std::abs(res.trace_chain[2] - 0.0625) == 0.0);
  CHECK(std::abs(res.trace_chain.back()) < 1e-15);
  // chain words reproduce the squaring tower
  REQUIRE(res.word_chain.size() >= 2);
  CHECK(res.word_chain[0] == ExponentWord({1}));
  for (std::size_t k = 0; k + 1 < res.trace_chain.size() && k < res.word_chain.size(); ++k) {
    Complex got = word_polynomial(res.word_chain[k]).evaluate(res.trace_chain[0]);
    CHECK(std::abs(got - res.trace_chain[k + 1]) <= 1e-12);
  }

  CHECK(!riley::sl_screen({5.0, 0.0}).certified);
  CHECK(!riley::sl_screen({0.0, 1.0}).certified);  // |z| = 1: one-sided
  CHECK(riley::sl_screen({0.99, 0.0}).certified);
  CHECK_THROWS_AS(riley::sl_screen({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("root location audits") {
  for (const auto& w : reference_words()) {
    auto audit = riley::root_location_audit(w);
    CHECK(audit.pass);
    CHECK(audit.roots.size() == audit.poly.degree());
    CHECK(audit.moduli.size() == audit.roots.size());
  }
}

TEST_CASE("supergroup witness at z0 = 2") {
  riley::WitnessBudget tiny{1, 1, 10};
  auto report = riley::supergroup_witness({2.0, 0.0}, {1.0, 0.0}, tiny);
  CHECK(report.accepted);
  CHECK(report.parity_even);
  CHECK(report.residual <= 1e-9);
  CHECK(report.branch_difference <= 2e-9);
  CHECK(std::abs(report.zeta - std::sqrt(2.0)) <= 1e-12);
  CHECK(report.words_searched == 2);
}

TEST_CASE("supergroup witness finds the period partner of the figure-eight point") {
  double r3 = std::sqrt(3.0);
  Complex fig8{0.5, r3 / 2.0}, partner{0.5, -r3 / 2.0};
  riley::WitnessBudget budget{2, 2, 100};
  auto report = riley::supergroup_witness(fig8, partner, budget);
  CHECK(report.accepted);
  CHECK(std::abs(report.zeta - partner) <= 1e-9);
  CHECK(report.distance <= 1e-9);
}

TEST_CASE("supergroup witness is thread independent") {
  riley::WitnessBudget budget{3, 2, 500};
  auto a = riley::supergroup_witness({2.0, 0.0}, {1.5, 0.5}, budget, 1);
  auto b = riley::supergroup_witness({2.0, 0.0}, {1.5, 0.5}, budget, 4);
  CHECK(a.word == b.word);
  CHECK(a.zeta == b.zeta);
  CHECK(a.distance == b.distance);
}

TEST_CASE("supergroup witness rejects z0 = 0") {
  CHECK_THROWS_AS(riley::supergroup_witness({0.0, 0.0}, {1.0, 0.0}, riley::WitnessBudget{}),
                  std::invalid_argument);
}

TEST_CASE("nielsen witness for the cubic") {
  auto report = riley::nielsen_witness(ExponentWord({1, 1}), 1);
  CHECK(report.cycle_found);
  CHECK(report.matrix_residual <= 1e-9);
  double r3 = std::sqrt(3.0);
  bool found = false;
  for (const auto& nc : report.cycles) {
    CHECK(nc.cycle.period == 2);
    bool has_pair = false, has_conj = false;
    for (Complex v : nc.gamma_squares) {
      if (std::abs(v - Complex(-0.5, r3 / 2.0)) <= 1e-9) has_pair = true;
      if (std::abs(v - Complex(-0.5, -r3 / 2.0)) <= 1e-9) has_conj = true;
    }
    if (has_pair && has_conj) {
      found = true;
      CHECK(nc.distinct_count == 2);
      CHECK(nc.achieves);
    }
  }
  CHECK(found);
}

TEST_CASE("nielsen witness for the square word") {
  auto report = riley::nielsen_witness(ExponentWord({1}), 1);
  CHECK(report.cycle_found);
  REQUIRE(report.cycles.size() == 1);
  CHECK(report.cycles[0].distinct_count == 2);
  CHECK(report.cycles[0].achieves);
  CHECK(report.matrix_residual <= 1e-9);
}

TEST_CASE("nielsen witness respects the degree cap") {
  CHECK_THROWS_AS(riley::nielsen_witness(ExponentWord({1, 1}), 3), std::invalid_argument);
}

TEST_CASE("nonfree certificates") {
  riley::WitnessBudget budget{2, 2, 100};
  auto cert = riley::nonfree_certificate({2.0, 0.0}, budget);
  REQUIRE(cert.has_value());
  CHECK(cert->word == ExponentWord({1, 1}));
  CHECK(cert->fixed_point_residual <= 1e-9 * 2.0);
  CHECK(cert->trace_residual <= 1e-9 * 2.0);

  CHECK(!riley::nonfree_certificate({5.0, 0.0}, budget).has_value());
  CHECK_THROWS_AS(riley::nonfree_certificate({0.0, 0.0}, budget), std::invalid_argument);
}

TEST_CASE("landmark trace moduli obey the discreteness bound") {
  bool hatch_taken = false;
  for (const auto& l : riley::landmark_table()) {
    for (const auto& w : reference_words()) {
      double v = std::abs(word_polynomial(w).evaluate(l.z));
      bool big = v >= 1.0 - 1e-9;
      bool vanishes = v <= 1e-9;
      CHECK((big || vanishes));
      if (vanishes) hatch_taken = true;
    }
  }
  CHECK(hatch_taken);  // e.g. (1,-1) kills the triangle_3 point
}

TEST_CASE("landmark backward orbits stay outside the certified slice region") {
  auto sys = riley::PolynomialSystem::from_words({ExponentWord({1}), ExponentWord({1, 1})});
  for (const auto& l : riley::landmark_table()) {
    auto cloud = backward_orbit(sys, l.z, 250, 31);
    for (Complex z : cloud.points)
      CHECK(riley::classify_region(z).kind != RegionKind::certified_slice);
  }
}
