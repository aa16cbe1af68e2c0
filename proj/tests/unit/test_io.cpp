#include <doctest.h>

#include <cmath>

#include "riley/io.hpp"

using riley::Complex;
namespace io = riley::io;

TEST_CASE("doubles survive the 17-digit format") {
  for (double x : {0.1 + 0.2, std::sqrt(3.0) / 2.0, -1e-300, 65536.0, 4.0 / 3.0}) {
    CHECK(std::stod(io::format_double(x)) == x);
  }
}

TEST_CASE("complex parsing") {
  CHECK(io::parse_complex("1.5+0.5i") == Complex(1.5, 0.5));
  CHECK(io::parse_complex("2") == Complex(2.0, 0.0));
  CHECK(io::parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(io::parse_complex("-2.5i") == Complex(0.0, -2.5));
  CHECK(io::parse_complex("1+i") == Complex(1.0, 1.0));
  CHECK(io::parse_complex("1-i") == Complex(1.0, -1.0));
  CHECK(io::parse_complex("i") == Complex(0.0, 1.0));
  CHECK(io::parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(io::parse_complex("1e-3+2.5e2i") == Complex(1e-3, 250.0));
  CHECK(io::parse_complex(" 0.5 + 0.866i ") == Complex(0.5, 0.866));
  CHECK_THROWS_AS(io::parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_complex("1+2"), std::invalid_argument);
  // round trip through the formatter
  Complex z{-0.125, 17.75};
  CHECK(io::parse_complex(io::format_complex(z)) == z);
}

TEST_CASE("polynomial json round trip") {
  riley::Integer big = 1;
  for (int i = 0; i < 45; ++i) big *= 7;
  riley::IntPolynomial p({riley::Integer(0), riley::Integer(-3), big});
  auto j = io::polynomial_to_json(p);
  CHECK(j["var"] == "z");
  CHECK(j["coeffs"][2].get<std::string>() == big.str());
  CHECK(io::polynomial_from_json(j) == p);
  CHECK(io::polynomial_from_json(io::json::parse(R"({"var":"z","coeffs":["0","1","-2","1"]})")) ==
        riley::IntPolynomial({riley::Integer(0), riley::Integer(1), riley::Integer(-2), riley::Integer(1)}));
  CHECK_THROWS_AS(io::polynomial_from_json(io::json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("laurent json round trip") {
  riley::LaurentPolynomial l(-1, {riley::Integer(-1), riley::Integer(0), riley::Integer(2)});
  auto j = io::laurent_to_json(l);
  CHECK(j["min_exp"] == -1);
  CHECK(io::laurent_from_json(j) == l);
}

TEST_CASE("exponent word json") {
  riley::ExponentWord w({3, -3, 3});
  auto j = io::exponent_word_to_json(w);
  CHECK(j.dump() == "[3,-3,3]");
  CHECK(io::exponent_word_from_json(j) == w);
  CHECK_THROWS_AS(io::exponent_word_from_json(io::json::parse("[1,0,1]")), std::invalid_argument);
  CHECK_THROWS_AS(io::exponent_word_from_json(io::json::parse("[1.5]")), std::invalid_argument);
}

TEST_CASE("point cloud csv") {
  riley::PointCloud cloud;
  cloud.points = {{0.5, std::sqrt(3.0) / 2.0}, {-1.0, 0.25}};
  std::string csv = io::point_cloud_to_csv(cloud);
  CHECK(csv.substr(0, 6) == "re,im\n");
  CHECK(csv.find("0.86602540378443") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("pgm encoding") {
  riley::Raster r;
  r.window = {0, 1, 0, 1};
  r.width = 3;
  r.height = 2;
  r.max_iter = 10;
  r.bailout = 5;
  r.data = {0, 1, 10, 5, 0, 2};
  std::string pgm = io::raster_to_pgm(r);
  CHECK(pgm.substr(0, 11) == "P5\n3 2\n255\n");
  REQUIRE(pgm.size() == 11 + 6);
  CHECK(static_cast<unsigned char>(pgm[11]) == 0);    // non-escaping stays 0
  CHECK(static_cast<unsigned char>(pgm[12]) == 1);    // first escape
  CHECK(static_cast<unsigned char>(pgm[13]) > static_cast<unsigned char>(pgm[12]));
  CHECK(static_cast<unsigned char>(pgm[15]) == 0);
}

TEST_CASE("report json shapes") {
  auto cert = riley::classify_region({5.0, 0.0});
  auto j = io::region_certificate_to_json(cert);
  CHECK(j["kind"] == "certified_slice");
  auto landmarks = io::landmarks_to_json();
  CHECK(landmarks.is_array());
  CHECK(landmarks.size() >= 9);
  CHECK(landmarks[0].contains("name"));
  CHECK(landmarks[0].contains("z"));
}
