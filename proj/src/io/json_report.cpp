#include "merostat/io/json_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "merostat/error.hpp"
#include "merostat/opid/hamiltonian.hpp"

namespace merostat::io {

using exact::ExactMatrix;
using exact::GaussianRational;
using singular::LaurentMatrix;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (pretty) os << '\n' << std::string(static_cast<size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << Json(it.key()).dump() << (pretty ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Rows of scalars stay on one line so matrices read as matrices.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << (flat && pretty ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        write(os, v, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_double(v) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

ExactMatrix parse_matrix(const Json& rows, int expect_rows, int expect_cols) {
  if (!rows.is_array() || rows.empty()) malformed("coefficient must be a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  const int m = rows[0].is_array() ? static_cast<int>(rows[0].size()) : 0;
  if (m == 0) malformed("matrix rows must be non-empty arrays");
  if (expect_rows >= 0 && (n != expect_rows || m != expect_cols)) malformed("coefficient matrices differ in shape");
  ExactMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != m) malformed("ragged coefficient matrix");
    for (int k = 0; k < m; ++k) {
      const auto& e = row[static_cast<size_t>(k)];
      if (e.is_string())
        out(i, k) = exact::parse_gaussian(e.get<std::string>());
      else if (e.is_number_integer())
        out(i, k) = GaussianRational(exact::Rational(e.get<long>()));
      else
        malformed("matrix entries must be exact strings or integers");
    }
  }
  return out;
}

std::string entry_string(const GaussianRational& z) { return exact::to_string(z); }

}  // namespace

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

LaurentMatrix parse_laurent(const Json& j) {
  if (!j.is_object()) malformed("Laurent input must be a JSON object");
  if (!j.contains("low") || !j["low"].is_number_integer()) malformed("missing integer field 'low'");
  if (!j.contains("coefficients") || !j["coefficients"].is_array() || j["coefficients"].empty())
    malformed("missing non-empty array 'coefficients'");
  GaussianRational center(0);
  if (j.contains("center")) {
    if (!j["center"].is_string()) malformed("'center' must be an exact string");
    center = exact::parse_gaussian(j["center"].get<std::string>());
  }
  int known_to = singular::kExactOrder;
  if (j.contains("known_to")) {
    if (!j["known_to"].is_number_integer()) malformed("'known_to' must be an integer");
    known_to = j["known_to"].get<int>();
  }
  std::vector<ExactMatrix> coeffs;
  int r = -1, c = -1;
  for (const auto& m : j["coefficients"]) {
    coeffs.push_back(parse_matrix(m, r, c));
    r = coeffs.back().rows();
    c = coeffs.back().cols();
  }
  if (r != c) malformed("system matrix must be square");
  return LaurentMatrix(j["low"].get<int>(), std::move(coeffs), known_to, center);
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(entry_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const LaurentMatrix& a) {
  Json j;
  j["center"] = entry_string(a.center());
  j["low"] = a.low();
  if (!a.terminating()) j["known_to"] = a.known_to();
  Json coeffs = Json::array();
  for (const auto& m : a.coeffs()) coeffs.push_back(to_json(m));
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json to_json(const singular::ClassificationReport& r) {
  Json j;
  j["verdict"] = singular::to_string(r.verdict);
  j["reason"] = singular::to_string(r.reason);
  j["detail"] = r.detail;
  j["K"] = r.K;
  j["second_order_reduced"] = r.second_order_reduced;
  j["integer_eigenvalues"] = r.integer_eigenvalues;
  j["distinct_eigenvalue_check"] = r.distinct_eigenvalue_check;
  if (r.W) {
    // Only the coefficients through K are certified.
    j["W"] = to_json(r.W->truncated(r.K));
    j["W_inv"] = to_json(r.W_inv->truncated(r.K));
  }
  return j;
}

Json poly_json(const opid::RPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(exact::to_string(c));
  if (a.empty()) a.push_back("0");
  return a;
}

Json ratfunc_json(const opid::RationalFunction& f) {
  Json j;
  j["num"] = poly_json(f.num());
  j["den"] = poly_json(f.den());
  return j;
}

Json kernel_poly_json(const opid::ResolventBundle& b) {
  Json j;
  j["kernel"] = poly_json(b.kernel);
  // Delta normalised to Delta(0) = 1.
  j["delta"] = poly_json(b.delta * opid::RPoly(exact::Rational(exact::Rational(1) / b.delta.coeff(0))));
  j["h2"] = ratfunc_json(b.h2);
  j["gamma0"] = ratfunc_json(b.gamma0);
  const auto H = opid::hamiltonian_from_h2(b.h2);
  j["r_times_sqrt2"] = ratfunc_json(*H.r_core());
  Json roots = Json::array();
  for (const auto& r : b.singular_points) {
    Json e;
    e["re"] = r.approx.real();
    e["im"] = r.approx.imag();
    e["multiplicity"] = r.multiplicity;
    roots.push_back(std::move(e));
  }
  j["delta_roots"] = std::move(roots);
  j["residue_plus_one_locus"] = poly_json(opid::residue_locus(b.gamma0, exact::Rational(1)));
  j["residue_minus_one_locus"] = poly_json(opid::residue_locus(b.gamma0, exact::Rational(-1)));
  Json v;
  v["log_derivative_identity"] = opid::gamma_log_derivative_check(b);
  v["h1_h2_is_half"] = b.h1_direct * b.h2 == opid::RationalFunction(opid::RPoly(exact::Rational(1, 2)));
  v["h2_at_zero_is_one"] = b.h2(exact::Rational(0)) == 1;
  j["verification"] = std::move(v);
  return j;
}

void write_trace_csv(std::ostream& os, const fredholm::SigmaTrace& t) {
  os << "x,re_sigma,im_sigma,re_d1,im_d1,re_d2,im_d2,residual\n";
  for (size_t i = 0; i < t.x.size(); ++i) {
    const double res = i < t.residual.size() ? t.residual[i] : std::nan("");
    os << format_double(t.x[i]) << ',' << format_double(t.sigma[i].real()) << ','
       << format_double(t.sigma[i].imag()) << ',' << format_double(t.d1[i].real()) << ','
       << format_double(t.d1[i].imag()) << ',' << format_double(t.d2[i].real()) << ','
       << format_double(t.d2[i].imag()) << ',' << format_double(res) << '\n';
  }
}

void write_continuation_csv(std::ostream& os, const fredholm::ContinuationMap& m) {
  os << "re_z,im_z,re_sigma,im_sigma,re_det,im_det\n";
  for (size_t i = 0; i < m.z.size(); ++i)
    os << format_double(m.z[i].real()) << ',' << format_double(m.z[i].imag()) << ','
       << format_double(m.sigma[i].real()) << ',' << format_double(m.sigma[i].imag()) << ','
       << format_double(m.det[i].real()) << ',' << format_double(m.det[i].imag()) << '\n';
}

void write_scan_csv(std::ostream& os, const fredholm::RealScan& s) {
  os << "xi,det\n";
  for (size_t i = 0; i < s.xi.size(); ++i) os << format_double(s.xi[i]) << ',' << format_double(s.det[i]) << '\n';
}

Json to_json(const fredholm::PoleCandidate& p) {
  Json j;
  j["re_z"] = p.z.real();
  j["im_z"] = p.z.imag();
  j["winding"] = p.winding;
  j["converged"] = p.converged;
  j["fit_r2"] = p.fit_r2;
  j["simple"] = p.simple;
  j["re_residue"] = p.residue.real();
  j["im_residue"] = p.residue.imag();
  return j;
}

Json to_json(const IdentityCheck& c, bool with_timing) {
  Json j;
  j["name"] = c.name;
  j["max_error"] = c.max_error;
  j["tolerance"] = c.tolerance;
  j["n"] = c.n;
  j["pass"] = c.pass();
  if (with_timing) j["seconds"] = c.seconds;
  return j;
}

}  // namespace merostat::io
