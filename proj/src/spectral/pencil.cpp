#include "merostat/spectral/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "merostat/error.hpp"
#include "merostat/exact/spectrum.hpp"

namespace merostat::spectral {

using exact::Poly;
using RhoPoly = Poly<GaussianRational>;

void MatrixPencil::validate() const {
  if (p.empty() || p.size() != q.size())
    throw Error(ErrorCode::InvalidArgument, "pencil needs the same number of p and q coefficients");
  const int n = p.front().rows();
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k].rows() != n || p[k].cols() != n || q[k].rows() != n || q[k].cols() != n)
      throw Error(ErrorCode::InvalidArgument, "pencil coefficients must all be n x n");
  if (low != -1) throw Error(ErrorCode::InvalidArgument, "pencil must start at the residue order -1");
}

LaurentMatrix MatrixPencil::at(const GaussianRational& rho) const {
  validate();
  std::vector<ExactMatrix> c;
  c.reserve(p.size());
  for (size_t k = 0; k < p.size(); ++k) c.push_back(p[k] + q[k] * rho);
  return LaurentMatrix(low, std::move(c));
}

namespace {

ExactMatrix residue(const std::vector<ExactMatrix>& coeffs, int low) {
  const int idx = -1 - low;
  return coeffs[static_cast<size_t>(idx)];
}

std::vector<std::complex<double>> eigen_list(const exact::SpectrumReport& s) {
  std::vector<std::complex<double>> out;
  for (const auto& e : s.eigenvalues)
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.exact ? e.exact->to_complex() : e.approx);
  return out;
}

bool near_integer(std::complex<double> z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

/// Greedy multiset comparison; eigenvalue lists are short.
bool same_multiset(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const auto& u, const auto& v) { return std::abs(u - z) < std::abs(v - z); });
    if (it == b.end() || std::abs(*it - z) > tol) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

PencilReport pencil_integer_check(const MatrixPencil& pencil, const std::vector<GaussianRational>& rho_samples) {
  pencil.validate();
  PencilReport rep;
  const ExactMatrix pm1 = residue(pencil.p, pencil.low);
  const ExactMatrix qm1 = residue(pencil.q, pencil.low);
  const int n = pm1.rows();

  exact::Matrix<RhoPoly> sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = RhoPoly(std::vector<GaussianRational>{pm1(i, j), qm1(i, j)});
  const Poly<RhoPoly> cp = exact::charpoly(sym);
  rep.rho_free = std::all_of(cp.coeffs().begin(), cp.coeffs().end(), [](const RhoPoly& c) { return c.degree() <= 0; });

  const auto spec = exact::integer_spectrum(pm1);
  rep.spectrum = eigen_list(spec);
  rep.integer_spectrum = spec.all_integer;
  for (const auto& rho : rho_samples)
    rep.samples.push_back({rho, eigen_list(exact::integer_spectrum(pm1 + qm1 * rho))});

  rep.passes = rep.rho_free && rep.integer_spectrum;
  if (!rep.rho_free) {
    for (int k = 0; k <= cp.degree(); ++k)
      if (cp.coeff(k).degree() > 0) {
        rep.detail = "coefficient of lambda^" + std::to_string(k) + " depends on rho: " + cp.coeff(k).to_string("rho");
        break;
      }
  } else if (!rep.integer_spectrum) {
    rep.detail = "residue spectrum is rho-free but not integer; characteristic polynomial " +
                 exact::to_string(spec.charpoly);
  }
  return rep;
}

PencilReport pencil_integer_check_numeric(const Eigen::MatrixXcd& pm1, const Eigen::MatrixXcd& qm1,
                                          const std::vector<std::complex<double>>& rho_samples, double tol) {
  if (pm1.rows() != pm1.cols() || qm1.rows() != pm1.rows() || qm1.cols() != pm1.cols())
    throw Error(ErrorCode::InvalidArgument, "pencil residues must be square of equal size");
  std::vector<std::complex<double>> distinct;
  for (const auto& r : rho_samples)
    if (std::none_of(distinct.begin(), distinct.end(), [&](const auto& d) { return std::abs(d - r) <= tol; }))
      distinct.push_back(r);
  if (distinct.size() < 3)
    throw Error(ErrorCode::InvalidArgument, "sampled pencil check needs at least three distinct rho values");

  PencilReport rep;
  const double scale = std::max({1.0, pm1.cwiseAbs().maxCoeff(), qm1.cwiseAbs().maxCoeff()});
  const double etol = tol * scale;
  rep.integer_spectrum = true;
  rep.rho_free = true;
  for (const auto& rho : distinct) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(pm1 + rho * qm1, false);
    PencilSample s;
    s.rho = exact::GaussianRational(exact::rationalize(rho.real()), exact::rationalize(rho.imag()));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) s.eigenvalues.push_back(es.eigenvalues()(k));
    for (const auto& z : s.eigenvalues)
      if (!near_integer(z, etol)) rep.integer_spectrum = false;
    if (!rep.samples.empty() && !same_multiset(rep.samples.front().eigenvalues, s.eigenvalues, etol))
      rep.rho_free = false;
    rep.samples.push_back(std::move(s));
  }
  // Char-poly coefficients have degree at most n in rho; agreement on the
  // samples is evidence of rho-independence, and an exact decision only with n + 1 of them.
  rep.spectrum = rep.samples.front().eigenvalues;
  rep.passes = rep.rho_free && rep.integer_spectrum;
  if (!rep.rho_free) rep.detail = "eigenvalues move with rho";
  else if (!rep.integer_spectrum) rep.detail = "non-integer eigenvalue";
  return rep;
}

}  // namespace merostat::spectral
