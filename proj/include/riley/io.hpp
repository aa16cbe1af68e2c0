#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "riley/dynamics.hpp"
#include "riley/int_polynomial.hpp"
#include "riley/laurent_polynomial.hpp"
#include "riley/moebius.hpp"
#include "riley/riley_analysis.hpp"
#include "riley/words.hpp"

namespace riley::io {

using json = nlohmann::json;

/// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double x);
std::string format_complex(Complex z);  // "re+imi" form

/// Accepts "1.5+0.5i", "2", "3i", "-2.5i", "1+i", "i", ...
Complex parse_complex(const std::string& text);

/// {"var":"z","coeffs":["c0","c1",...]} with decimal-string coefficients.
json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

/// Same shape with an added integer "min_exp" and "var":"s".
json laurent_to_json(const LaurentPolynomial& l);
LaurentPolynomial laurent_from_json(const json& j);

json exponent_word_to_json(const ExponentWord& s);
ExponentWord exponent_word_from_json(const json& j);

json complex_to_json(Complex z);  // [re, im]
Complex complex_from_json(const json& j);

/// CSV with header "re,im", one point per line, 17 significant digits.
std::string point_cloud_to_csv(const PointCloud& cloud);

/// Binary PGM (P5), maxval 255; counts scaled monotonically, 0 stays 0.
std::string raster_to_pgm(const Raster& r);

json cycles_to_json(const std::vector<Cycle>& cycles);
json orbit_to_json(const Orbit& orbit);
json witness_report_to_json(const WitnessReport& report);
json nielsen_report_to_json(const NielsenReport& report);
json screen_to_json(const ScreenResult& screen);
json audit_to_json(const RootAudit& audit);
json landmarks_to_json();
json region_certificate_to_json(const RegionCertificate& cert);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace riley::io
