#include "merostat/fredholm/continuation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "merostat/error.hpp"
#include "merostat/fredholm/sigma.hpp"
#include "merostat/numeric/parallel.hpp"

namespace merostat::fredholm {

namespace {

constexpr double kPi = std::numbers::pi;

cplx det_at(const SmoothKernel& k, cplx z, int n) { return fredholm_det(nystrom_build(k, z, n)); }

/// Change of arg D along the segment, bisected until each step turns by less than pi/3.
double arg_change(const SmoothKernel& k, cplx z0, cplx d0, cplx z1, cplx d1, int n, int depth) {
  const double step = std::arg(d1 / d0);
  if (std::fabs(step) <= kPi / 3 || depth >= 14) return step;
  const cplx zm = 0.5 * (z0 + z1);
  const cplx dm = det_at(k, zm, n);
  return arg_change(k, z0, d0, zm, dm, n, depth + 1) + arg_change(k, zm, dm, z1, d1, n, depth + 1);
}

cplx newton_zero(const SmoothKernel& k, cplx z, int n, bool& converged) {
  converged = false;
  for (int it = 0; it < 60; ++it) {
    const cplx d = det_at(k, z, n);
    const cplx dd = central_difference([&](cplx s) { return det_at(k, s, n); }, z, 1e-3 * std::max(1.0, std::abs(z)));
    if (dd == cplx(0.0)) return z;
    const cplx step = d / dd;
    z -= step;
    if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(z))) {
      converged = true;
      return z;
    }
  }
  return z;
}

bool inside(const Rect& r, cplx z, double margin) {
  return z.real() >= r.re_min - margin && z.real() <= r.re_max + margin && z.imag() >= r.im_min - margin &&
         z.imag() <= r.im_max + margin;
}

void check_region(const SmoothKernel& k, const Rect& r) {
  if (!(r.re_min <= r.re_max) || !(r.im_min <= r.im_max)) throw Error(ErrorCode::InvalidRegion, "rectangle bounds are reversed");
  for (double re : {r.re_min, r.re_max})
    for (double im : {r.im_min, r.im_max})
      if (!k.admits_segment(0.0, cplx(re, im)))
        throw Error(ErrorCode::InvalidRegion, "rectangle leaves the analyticity region of " + k.describe());
}

}  // namespace

int zero_count(const SmoothKernel& k, const Rect& cell, int n) {
  const cplx corners[4] = {{cell.re_min, cell.im_min}, {cell.re_max, cell.im_min}, {cell.re_max, cell.im_max}, {cell.re_min, cell.im_max}};
  constexpr int kPerEdge = 16;
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const cplx a = corners[e], b = corners[(e + 1) % 4];
    cplx z0 = a, d0 = det_at(k, a, n);
    for (int i = 1; i <= kPerEdge; ++i) {
      const cplx z1 = a + (b - a) * (static_cast<double>(i) / kPerEdge);
      const cplx d1 = det_at(k, z1, n);
      total += arg_change(k, z0, d0, z1, d1, n, 0);
      z0 = z1;
      d0 = d1;
    }
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

PoleCandidate pole_diagnostics(const SmoothKernel& k, cplx z0, const Fn& f, const Fn& g, int n, double r) {
  PoleCandidate p;
  p.z = z0;
  const double h = 2 * r;
  p.winding = zero_count(k, Rect{z0.real() - h, z0.real() + h, z0.imag() - h, z0.imag() + h}, n);
  constexpr int m = 32;
  std::vector<cplx> dz(m), inv(m);
  cplx residue = 0.0;
  for (int i = 0; i < m; ++i) {
    dz[i] = std::polar(r, 2 * kPi * (i + 0.5) / m);
    const cplx s = resolvent_bilinear(nystrom_build(k, z0 + dz[i], n), f, g);
    inv[i] = 1.0 / s;
    residue += s * dz[i];
  }
  p.residue = residue / static_cast<double>(m);
  // Least squares 1/sigma ~ a + b dz; on a centred ring the normal equations decouple.
  cplx mean = 0.0, sxy = 0.0;
  double sxx = 0.0;
  for (int i = 0; i < m; ++i) mean += inv[i];
  mean /= static_cast<double>(m);
  for (int i = 0; i < m; ++i) {
    sxy += std::conj(dz[i]) * (inv[i] - mean);
    sxx += std::norm(dz[i]);
  }
  const cplx slope = sxy / sxx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (int i = 0; i < m; ++i) {
    ss_res += std::norm(inv[i] - mean - slope * dz[i]);
    ss_tot += std::norm(inv[i] - mean);
  }
  p.fit_r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  p.converged = true;
  p.simple = p.winding == 1 && p.fit_r2 > 0.999;
  return p;
}

ContinuationMap analytic_continuation_probe(const SmoothKernel& k, const Rect& region, const Fn& f, const Fn& g,
                                            const ProbeOptions& opt) {
  check_region(k, region);
  if (opt.nx < 1 || opt.ny < 1) throw Error(ErrorCode::InvalidArgument, "probe grid needs at least one point per axis");
  ContinuationMap map;
  map.nx = opt.nx;
  map.ny = opt.ny;
  const double dx = opt.nx > 1 ? (region.re_max - region.re_min) / (opt.nx - 1) : 0.0;
  const double dy = opt.ny > 1 ? (region.im_max - region.im_min) / (opt.ny - 1) : 0.0;
  const size_t total = static_cast<size_t>(opt.nx) * static_cast<size_t>(opt.ny);
  map.z.resize(total);
  map.sigma.resize(total);
  map.det.resize(total);
  for (int j = 0; j < opt.ny; ++j)
    for (int i = 0; i < opt.nx; ++i)
      map.z[static_cast<size_t>(j) * opt.nx + i] = cplx(region.re_min + i * dx, region.im_min + j * dy);
  numeric::parallel_for(total, [&](size_t idx) {
    const auto op = nystrom_build(k, map.z[idx], opt.n);
    map.det[idx] = fredholm_det(op);
    try {
      map.sigma[idx] = resolvent_bilinear(op, f, g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NearSingular) throw;
      map.sigma[idx] = cplx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
    }
  });

  const double w = region.re_max - region.re_min, h = region.im_max - region.im_min;
  if (w <= 0.0 || h <= 0.0) return map;
  for (int cy = 0; cy < opt.cells_y; ++cy)
    for (int cx = 0; cx < opt.cells_x; ++cx) {
      const Rect cell{region.re_min + w * cx / opt.cells_x, region.re_min + w * (cx + 1) / opt.cells_x,
                      region.im_min + h * cy / opt.cells_y, region.im_min + h * (cy + 1) / opt.cells_y};
      const int count = zero_count(k, cell, opt.n);
      if (count <= 0) continue;
      bool converged = false;
      const cplx start(0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max));
      const cplx z = newton_zero(k, start, opt.n, converged);
      PoleCandidate p;
      p.z = z;
      if (converged && inside(cell, z, 1e-9)) {
        const double r = 1e-3 * std::max(1.0, std::abs(z));
        p = pole_diagnostics(k, z, f, g, opt.n, r);
      }
      p.converged = converged;
      p.winding = count;
      p.simple = p.simple && count == 1;
      map.poles.push_back(p);
    }
  return map;
}

RealScan real_determinant_scan(const SmoothKernel& k, double a, double b, const Fn& f, const Fn& g, int samples, int n) {
  if (!(a < b) || samples < 2) throw Error(ErrorCode::InvalidArgument, "scan needs a < b and at least two samples");
  RealScan out;
  out.xi.resize(static_cast<size_t>(samples));
  out.det.resize(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) out.xi[static_cast<size_t>(i)] = a + (b - a) * (i + 1) / (samples + 1);
  numeric::parallel_for(static_cast<size_t>(samples),
                        [&](size_t i) { out.det[i] = det_at(k, out.xi[i], n).real(); });
  for (size_t i = 0; i + 1 < out.xi.size(); ++i) {
    if (out.det[i] == 0.0 || out.det[i] * out.det[i + 1] < 0.0) {
      double lo = out.xi[i], hi = out.xi[i + 1];
      double dlo = out.det[i];
      while (hi - lo > 1e-15 * hi && dlo != 0.0) {
        const double mid = 0.5 * (lo + hi);
        const double dm = det_at(k, mid, n).real();
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((dm < 0.0) == (dlo < 0.0))
          lo = mid, dlo = dm;
        else
          hi = mid;
      }
      out.crossing_found = true;
      out.xi_star = 0.5 * (lo + hi);
      out.pole = pole_diagnostics(k, out.xi_star, f, g, n, 1e-3 * std::max(1.0, out.xi_star));
      break;
    }
  }
  return out;
}

}  // namespace merostat::fredholm
