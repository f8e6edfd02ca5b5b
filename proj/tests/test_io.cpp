#include <sstream>

#include "doctest.h"
#include "merostat/error.hpp"
#include "merostat/io/json_report.hpp"

using namespace merostat::io;
using merostat::ErrorCode;
using merostat::exact::Rational;
using merostat::opid::RPoly;
using merostat::singular::LaurentMatrix;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const merostat::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("doubles are written with 17 significant digits and read back exactly") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  CHECK(format_double(std::nan("")) == "nan");
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -7.25e-12}) CHECK(std::stod(format_double(v)) == v);

  Json j;
  j["a"] = 0.1;
  j["b"] = {1, 2.0};
  j["c"] = std::nan("");
  CHECK(dump(j, -1) == R"({"a":0.10000000000000001,"b":[1,2],"c":null})");
  // Pretty output keeps rows of scalars on one line.
  CHECK(dump(j) == "{\n  \"a\": 0.10000000000000001,\n  \"b\": [1, 2],\n  \"c\": null\n}");
  CHECK(dump(j) == dump(Json::parse(dump(j, -1))));
}

TEST_CASE("Laurent input round-trips through JSON") {
  const auto in = Json::parse(R"({"center": "1/2", "low": -1, "known_to": 3,
    "coefficients": [[["1/2", "0"], ["0", "-3"]], [["1+2i", 4], ["0", "-7/9i"]]]})");
  const LaurentMatrix a = parse_laurent(in);
  CHECK(a.low() == -1);
  CHECK(a.known_to() == 3);
  CHECK(a.coeff(-1)(0, 0) == merostat::exact::GaussianRational(Rational(1, 2)));
  CHECK(a.coeff(0)(0, 1) == merostat::exact::GaussianRational(4));
  CHECK(a.coeff(0)(1, 1) == merostat::exact::GaussianRational(Rational(0), Rational(-7, 9)));
  const Json out = to_json(a);
  CHECK(out["coefficients"][1][0][0] == "1+2i");
  CHECK(parse_laurent(out).equal_through(a, 3));
}

TEST_CASE("malformed Laurent input is rejected") {
  const char* bad[] = {
      R"([1, 2])",
      R"({"coefficients": [[["1"]]]})",
      R"({"low": -1, "coefficients": []})",
      R"({"low": -1, "coefficients": [[["1", "0"], ["0"]]]})",
      R"({"low": -1, "coefficients": [[["1", "0"], ["0", "1"]], [["1"]]]})",
      R"({"low": -1, "coefficients": [[["1", "0"]]]})",
      R"({"low": -1, "coefficients": [[["x"]]]})",
      R"({"low": -1, "coefficients": [[[0.5]]]})",
      R"({"low": -1, "center": 0, "coefficients": [[["1"]]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(code_of([&] { parse_laurent(Json::parse(text)); }) == ErrorCode::MalformedInput);
  }
}

TEST_CASE("kernel-poly JSON for k = x^2") {
  const auto j = kernel_poly_json(merostat::opid::poly_kernel_resolvent(RPoly::monomial(Rational(1), 2)));
  const std::vector<std::string> delta{"1", "0", "0", "0", "0", "0", "-1/30", "0", "0", "1/1080"};
  CHECK(j["delta"].get<std::vector<std::string>>() == delta);
  CHECK(j["delta_roots"].size() == 9);
  for (const auto& [name, ok] : j["verification"].items()) {
    CAPTURE(name);
    CHECK(ok.get<bool>());
  }
  // Residue loci as monic or scaled exact polynomials: roots of x^3 - 6.
  const auto plus = j["residue_plus_one_locus"].get<std::vector<std::string>>();
  REQUIRE(plus.size() == 4);
  CHECK(plus[1] == "0");
  CHECK(plus[2] == "0");
}

TEST_CASE("trace and scan CSV layout") {
  merostat::fredholm::SigmaTrace t;
  t.x = {0.5, 1.0};
  t.sigma = {{-0.25, 0.0}, {-0.5, 1e-17}};
  t.d1 = t.sigma;
  t.d2 = t.sigma;
  t.residual = {1e-9};
  std::ostringstream os;
  write_trace_csv(os, t);
  CHECK(os.str() ==
        "x,re_sigma,im_sigma,re_d1,im_d1,re_d2,im_d2,residual\n"
        "0.5,-0.25,0,-0.25,0,-0.25,0,1.0000000000000001e-09\n"
        "1,-0.5,1.0000000000000001e-17,-0.5,1.0000000000000001e-17,-0.5,1.0000000000000001e-17,nan\n");

  merostat::fredholm::RealScan s;
  s.xi = {0.0, 0.5};
  s.det = {1.0, 0.25};
  std::ostringstream sc;
  write_scan_csv(sc, s);
  CHECK(sc.str() == "xi,det\n0,1\n0.5,0.25\n");
}

TEST_CASE("identity checks omit timings unless asked") {
  IdentityCheck c{"residual", 2e-9, 1e-6, 200, 1.5};
  CHECK(c.pass());
  CHECK_FALSE(to_json(c).contains("seconds"));
  CHECK(to_json(c, true)["seconds"] == 1.5);
  c.max_error = 1e-6;
  CHECK_FALSE(c.pass());
}
