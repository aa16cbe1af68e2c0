#include "riley/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace riley::io {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  if (z.imag() >= 0 || std::isnan(z.imag()))
    out += "+";
  out += format_double(z.imag()) + "i";
  return out;
}

Complex parse_complex(const std::string& text) {
  // forms: A, Bi, A+Bi, A-Bi with B optionally implicit ("i", "-i")
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& t) -> double {
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number: " + t);
    return v;
  };

  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      if (body.empty() || body == "+") return {0.0, 1.0};
      if (body == "-") return {0.0, -1.0};
      return {0.0, parse_real(body)};
    }
    std::string re_part = body.substr(0, split);
    std::string im_part = body.substr(split);
    double im;
    if (im_part == "+")
      im = 1.0;
    else if (im_part == "-")
      im = -1.0;
    else
      im = parse_real(im_part);
    return {parse_real(re_part), im};
  }
  return {parse_real(s), 0.0};
}

json polynomial_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"var", "z"}, {"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON needs a coeffs array");
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long long>());
    else
      throw std::invalid_argument("polynomial coefficients must be decimal strings or integers");
  }
  return IntPolynomial(std::move(coeffs));
}

json laurent_to_json(const LaurentPolynomial& l) {
  json coeffs = json::array();
  for (const auto& c : l.coefficients()) coeffs.push_back(c.str());
  return json{{"var", "s"},
              {"min_exp", l.is_zero() ? 0 : l.min_exponent()},
              {"coeffs", coeffs}};
}

LaurentPolynomial laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("min_exp"))
    throw std::invalid_argument("Laurent JSON needs coeffs and min_exp");
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.emplace_back(c.get<std::string>());
  return LaurentPolynomial(j["min_exp"].get<std::int64_t>(), std::move(coeffs));
}

json exponent_word_to_json(const ExponentWord& s) {
  json out = json::array();
  for (std::int64_t e : s) out.push_back(e);
  return out;
}

ExponentWord exponent_word_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("exponent sequence must be a JSON array");
  std::vector<std::int64_t> exps;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("exponents must be integers");
    exps.push_back(e.get<std::int64_t>());
  }
  return ExponentWord(std::move(exps));
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex JSON must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string point_cloud_to_csv(const PointCloud& cloud) {
  std::string out = "re,im\n";
  for (Complex z : cloud.points) {
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += '\n';
  }
  return out;
}

std::string raster_to_pgm(const Raster& r) {
  std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
  out.reserve(out.size() + r.data.size());
  std::uint32_t denom = std::max<std::uint32_t>(1, r.max_iter);
  for (std::uint32_t v : r.data) {
    unsigned char pixel = 0;
    if (v > 0) {
      std::uint64_t scaled = 1 + (static_cast<std::uint64_t>(v - 1) * 254) / denom;
      pixel = static_cast<unsigned char>(std::min<std::uint64_t>(255, scaled));
    }
    out += static_cast<char>(pixel);
  }
  return out;
}

json cycles_to_json(const std::vector<Cycle>& cycles) {
  json out = json::array();
  for (const Cycle& c : cycles) {
    json pts = json::array();
    for (Complex z : c.points) pts.push_back(complex_to_json(z));
    out.push_back(json{{"period", c.period}, {"points", pts}});
  }
  return out;
}

json orbit_to_json(const Orbit& orbit) {
  json pts = json::array();
  for (Complex z : orbit.points) pts.push_back(complex_to_json(z));
  json out{{"points", pts},
           {"escaped", orbit.escaped},
           {"eventually_periodic", orbit.eventually_periodic}};
  if (orbit.eventually_periodic) {
    out["preperiod"] = orbit.preperiod;
    out["period"] = orbit.period;
  }
  return out;
}

json witness_report_to_json(const WitnessReport& report) {
  return json{{"target", complex_to_json(report.target)},
              {"lambda", complex_to_json(report.lambda)},
              {"word", exponent_word_to_json(report.word)},
              {"zeta", complex_to_json(report.zeta)},
              {"distance", report.distance},
              {"residual", report.residual},
              {"branch_check", report.branch_difference},
              {"parity_even", report.parity_even},
              {"accepted", report.accepted},
              {"words_searched", report.words_searched}};
}

json nielsen_report_to_json(const NielsenReport& report) {
  json cycles = json::array();
  for (const NielsenCycle& nc : report.cycles) {
    json pts = json::array(), sq = json::array();
    for (Complex z : nc.cycle.points) pts.push_back(complex_to_json(z));
    for (Complex z : nc.gamma_squares) sq.push_back(complex_to_json(z));
    cycles.push_back(json{{"period", nc.cycle.period},
                          {"points", pts},
                          {"gamma_squares", sq},
                          {"distinct", nc.distinct_count},
                          {"achieves", nc.achieves}});
  }
  return json{{"word", exponent_word_to_json(report.word)},
              {"classes", report.requested_classes},
              {"period", report.period},
              {"cycle_found", report.cycle_found},
              {"matrix_residual", report.matrix_residual},
              {"cycles", cycles}};
}

json screen_to_json(const ScreenResult& screen) {
  json chain = json::array();
  for (Complex z : screen.trace_chain) chain.push_back(complex_to_json(z));
  json words = json::array();
  for (const ExponentWord& w : screen.word_chain) words.push_back(exponent_word_to_json(w));
  return json{{"status", screen.certified ? "nondiscrete_certified" : "inconclusive"},
              {"z0", complex_to_json(screen.z0)},
              {"trace_chain", chain},
              {"word_chain", words},
              {"word_chain_truncated", screen.word_chain_truncated}};
}

json audit_to_json(const RootAudit& audit) {
  json roots_json = json::array();
  for (Complex r : audit.roots) roots_json.push_back(complex_to_json(r));
  return json{{"word", exponent_word_to_json(audit.word)},
              {"polynomial", polynomial_to_json(audit.poly)},
              {"roots", roots_json},
              {"moduli", audit.moduli},
              {"pass", audit.pass}};
}

json landmarks_to_json() {
  json out = json::array();
  for (const Landmark& l : landmark_table())
    out.push_back(json{{"name", l.name},
                       {"z", complex_to_json(l.z)},
                       {"description", l.description}});
  return out;
}

json region_certificate_to_json(const RegionCertificate& cert) {
  const char* kind = cert.kind == RegionKind::certified_slice        ? "certified_slice"
                     : cert.kind == RegionKind::certified_complement ? "certified_complement"
                                                                     : "unknown";
  return json{{"kind", kind}, {"witness", cert.witness}};
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace riley::io
