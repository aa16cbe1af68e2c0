#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riley/dynamics.hpp"
#include "riley/moebius.hpp"
#include "riley/words.hpp"

namespace riley {

/// Arithmetic points in the complement of the Riley slice.
struct Landmark {
  std::string name;
  Complex z;
  std::string description;
};

/// The built-in table: figure-eight, Whitehead, the slope-10/3 and 12/5
/// links, and the (p,inf,inf) triangle points for p = 3..7.
const std::vector<Landmark>& landmark_table();

/// -4 cos^2(pi/p), real, in (-4, -1] for p >= 3.
Landmark triangle_landmark(int p);

enum class RegionKind { certified_slice, certified_complement, unknown };

struct RegionCertificate {
  RegionKind kind = RegionKind::unknown;
  std::string witness;
};

/// Conservative axis certificates: the slice is certified only for real z
/// with |z| > 4 or purely imaginary z with |Im z| > 2; the complement only on
/// the complementary axis segments (excluding 0) and at landmarks.
RegionCertificate classify_region(Complex z);

/// Complement certificate from a verified bounded cycle of a word
/// polynomial; throws if the cycle fails validation at 1e-9.
RegionCertificate certificate_from_cycle(const IntPolynomial& p, const Cycle& cycle);

struct ScreenResult {
  bool certified = false;  // false: inconclusive (the screen is one-sided)
  Complex z0{};
  std::vector<Complex> trace_chain;       // z, z^2, z^4, ... down to ~0
  std::vector<ExponentWord> word_chain;   // squaring words, capped in length
  bool word_chain_truncated = false;
};

/// Squaring-word screen: certifies non-discreteness for 0 < |z| < 1 via the
/// chain z, z^2, z^4, ...; inconclusive for |z| >= 1; rejects z = 0.
ScreenResult sl_screen(Complex z);

struct RootAudit {
  ExponentWord word;
  IntPolynomial poly;
  std::vector<Complex> roots;
  std::vector<double> moduli;
  bool pass = false;  // no root certified inside the slice region
};

RootAudit root_location_audit(const ExponentWord& word);

struct WitnessBudget {
  int max_len = 3;
  int max_exp = 3;
  std::size_t limit = 2000;
};

struct WitnessReport {
  Complex target{};   // z0
  Complex lambda{};
  ExponentWord word;
  Complex zeta{};
  double distance = 0.0;        // |zeta - lambda|
  double residual = 0.0;        // matrix-level principal-character error
  double branch_difference = 0.0;
  bool parity_even = false;     // phi-letter count of W f W^-1 is even (structural)
  bool accepted = false;
  std::size_t words_searched = 0;
};

/// Searches the budgeted word stream for the preimage of z0 closest to
/// lambda, then verifies at the matrix level that <f, W f W^-1> at the found
/// zeta has principal character (z0^2, 0, 0) to 1e-9, recomputing with the
/// other square-root branch as a cross-check.
WitnessReport supergroup_witness(Complex z0, Complex lambda, const WitnessBudget& budget,
                                 int threads = 1);

struct NielsenCycle {
  Cycle cycle;
  std::vector<Complex> gamma_squares;
  int distinct_count = 0;
  bool achieves = false;  // distinct_count >= N
};

struct NielsenReport {
  ExponentWord word;
  int requested_classes = 0;  // N
  int period = 0;             // 2N
  std::vector<NielsenCycle> cycles;
  bool cycle_found = false;
  double matrix_residual = 0.0;  // star-power trace identity check on one cycle
};

/// Finds cycles of exact length 2N of the word polynomial, counts distinct
/// gamma^2 values per cycle at 1e-8 separation, and verifies on one cycle
/// point that the star powers reproduce the polynomial iterates.
NielsenReport nielsen_witness(const ExponentWord& word, int n_classes,
                              std::size_t degree_cap = 243);

struct NonfreeCertificate {
  ExponentWord word;
  Complex value{};
  double fixed_point_residual = 0.0;
  double trace_residual = 0.0;
};

/// Searches the budgeted stream for a word polynomial fixing z (to 1e-9
/// relative) and verifies the trace identity gamma(f, w) = gamma(f, phi)
/// numerically.  Absence within the budget proves nothing.
std::optional<NonfreeCertificate> nonfree_certificate(Complex z, const WitnessBudget& budget);

}  // namespace riley
