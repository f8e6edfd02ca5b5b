#pragma once

// Serialization of reports and traces.  Exact values travel as "p/q" (or
// "a+bi") strings so nothing is lost; floating values are written with 17
// significant digits so identical inputs give byte-identical output.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "merostat/fredholm/continuation.hpp"
#include "merostat/fredholm/ode_residual.hpp"
#include "merostat/opid/resolvent.hpp"
#include "merostat/singular/classify.hpp"

namespace merostat::io {

using Json = nlohmann::ordered_json;

/// "%.17g"; NaN and infinities become "nan", "inf", "-inf".
std::string format_double(double v);

/// Compact or indented JSON with every float written by format_double.
/// Non-finite floats are written as null.
std::string dump(const Json& j, int indent = 2);

/// Matrix Laurent input:
///   {"center": "0", "low": -1, "known_to": 12 (optional),
///    "coefficients": [ [["1/2","0"],["0","0"]], ... ]}
/// Throws MalformedInput on any schema or parse problem.
singular::LaurentMatrix parse_laurent(const Json& j);

Json to_json(const exact::ExactMatrix& m);
Json to_json(const singular::LaurentMatrix& a);
Json to_json(const singular::ClassificationReport& r);

/// Coefficients lowest degree first, as exact strings.
Json poly_json(const opid::RPoly& p);
Json ratfunc_json(const opid::RationalFunction& f);

/// Delta, h2, Gamma0, r = 1/h2(2x) and the exact verification booleans.
Json kernel_poly_json(const opid::ResolventBundle& b);

/// x, re_sigma, im_sigma, re_d1, im_d1, re_d2, im_d2, residual.
void write_trace_csv(std::ostream& os, const fredholm::SigmaTrace& t);
/// re_z, im_z, re_sigma, im_sigma, re_det, im_det.
void write_continuation_csv(std::ostream& os, const fredholm::ContinuationMap& m);
/// xi, det.
void write_scan_csv(std::ostream& os, const fredholm::RealScan& s);

Json to_json(const fredholm::PoleCandidate& p);

/// One numerical identity check.  `seconds` is written only when asked for,
/// because timings would break byte-identical output.
struct IdentityCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  int n = 0;
  double seconds = 0.0;
  bool pass() const { return max_error < tolerance; }
};

Json to_json(const IdentityCheck& c, bool with_timing = false);

}  // namespace merostat::io
