#include "merostat/exact/spectrum.hpp"

#include <algorithm>
#include <string>

#include "merostat/error.hpp"

namespace merostat::exact {

std::vector<long> SpectrumReport::integer_eigenvalues() const {
  std::vector<long> out;
  for (const auto& e : eigenvalues)
    if (e.exact && e.exact->is_integer()) out.push_back(e.exact->re().get_num().get_si());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpectrumReport integer_spectrum(const ExactMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidArgument, "integer_spectrum needs a square matrix");
  if (a.rows() > kMaxExactDimension)
    throw Error(ErrorCode::DimensionTooLarge, "exact eigenstructure is limited to n <= 8, got n = " + std::to_string(a.rows()));
  SpectrumReport rep;
  rep.charpoly = charpoly(a);
  rep.eigenvalues = poly_roots(rep.charpoly);
  rep.all_integer = true;
  rep.all_exact = true;
  for (const auto& e : rep.eigenvalues) {
    if (!e.exact) rep.all_exact = false;
    if (!e.exact || !e.exact->is_integer()) rep.all_integer = false;
  }
  return rep;
}

SpectrumReport integer_spectrum(const RationalMatrix& a) { return integer_spectrum(to_gaussian(a)); }

ExactMatrix JordanForm::jordan_matrix() const {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  ExactMatrix j(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int k = 0; k < b.size; ++k) {
      j(off + k, off + k) = b.eigenvalue;
      if (k + 1 < b.size) j(off + k, off + k + 1) = GaussianRational(1);
    }
    off += b.size;
  }
  return j;
}

namespace {

ExactMatrix power(const ExactMatrix& m, int k) {
  ExactMatrix out = ExactMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

struct EigenChains {
  GaussianRational lambda;
  int first_free = 0;
  std::vector<std::vector<ExactMatrix>> chains;  // each chain: eigenvector first
};

EigenChains chains_for(const ExactMatrix& a, const GaussianRational& lambda, int mult) {
  const int n = a.rows();
  const ExactMatrix N = a - ExactMatrix::identity(n) * lambda;
  EigenChains ec;
  ec.lambda = lambda;
  ec.first_free = free_columns(N).front();

  std::vector<ExactMatrix> kernels{ExactMatrix(n, 0)};
  while (kernels.back().cols() < mult) {
    const int j = static_cast<int>(kernels.size());
    kernels.push_back(nullspace(power(N, j)));
    if (j > n) throw Error(ErrorCode::IrrationalSpectrum, "generalized eigenspace did not stabilize");
  }
  const int s = static_cast<int>(kernels.size()) - 1;

  struct Top {
    ExactMatrix v;
    int level;
  };
  std::vector<Top> tops;
  for (int j = s; j >= 1; --j) {
    ExactMatrix span = kernels[static_cast<size_t>(j - 1)];
    for (const auto& t : tops) span = span.hcat(power(N, t.level - j) * t.v);
    int r = span.cols() ? rank(span) : 0;
    const ExactMatrix& kj = kernels[static_cast<size_t>(j)];
    for (int c = 0; c < kj.cols(); ++c) {
      ExactMatrix cand = span.hcat(kj.column(c));
      const int rc = rank(cand);
      if (rc > r) {
        span = cand;
        r = rc;
        tops.push_back({kj.column(c), j});
      }
    }
  }
  for (const auto& t : tops) {
    std::vector<ExactMatrix> chain;
    for (int k = t.level - 1; k >= 0; --k) chain.push_back(power(N, k) * t.v);
    ec.chains.push_back(std::move(chain));
  }
  return ec;
}

}  // namespace

JordanForm jordan_decomposition(const ExactMatrix& a) {
  const SpectrumReport spec = integer_spectrum(a);
  if (!spec.all_exact)
    throw Error(ErrorCode::IrrationalSpectrum, "eigenvalues outside Q(i); characteristic polynomial " +
                                                  to_string(spec.charpoly));
  std::vector<EigenChains> all;
  for (const auto& e : spec.eigenvalues) all.push_back(chains_for(a, *e.exact, e.multiplicity));
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first_free < y.first_free; });

  JordanForm jf;
  jf.transform = ExactMatrix(a.rows(), 0);
  for (const auto& ec : all)
    for (const auto& chain : ec.chains) {
      for (const auto& v : chain) jf.transform = jf.transform.hcat(v);
      jf.blocks.push_back({ec.lambda, static_cast<int>(chain.size())});
    }
  return jf;
}

}  // namespace merostat::exact
