#include "merostat/exact/rational.hpp"

#include <cctype>
#include <sstream>

#include "merostat/error.hpp"

namespace merostat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::NoIntegerEigenvalue: return "NoIntegerEigenvalue";
    case ErrorCode::UnsupportedPoleOrder: return "UnsupportedPoleOrder";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NotJordanAdapted: return "NotJordanAdapted";
    case ErrorCode::NonSimpleRoot: return "NonSimpleRoot";
    case ErrorCode::ExpansionUnavailable: return "ExpansionUnavailable";
    case ErrorCode::SingularAtZero: return "SingularAtZero";
    case ErrorCode::SingularOperator: return "SingularOperator";
    case ErrorCode::NearSingular: return "NearSingular";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace merostat

namespace merostat::exact {

namespace {

std::string trimmed(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trimmed(text);
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty rational");
  bool neg = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = trimmed(body.substr(0, slash));
    std::string den = trimmed(body.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) throw Error(ErrorCode::MalformedInput, "bad rational '" + s + "'");
    BigInt d(den, 10);
    if (d == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + s + "'");
    out = Rational(BigInt(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::MalformedInput, "bad decimal '" + s + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    out = Rational(BigInt(ip + fp, 10), den);
  } else {
    if (!all_digits(body)) throw Error(ErrorCode::MalformedInput, "bad integer '" + s + "'");
    out = Rational(BigInt(body, 10));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational nrm = o.norm();
  if (sgn(nrm) == 0) throw std::domain_error("Gaussian rational division by zero");
  *this *= o.conj();
  re_ /= nrm;
  im_ /= nrm;
  return *this;
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational(0);
  // sqrt(a + bi) = x + yi with x^2 = (|z| + a)/2, y^2 = (|z| - a)/2, sign(y) = sign(b).
  auto modulus = exact_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = exact_sqrt((*modulus + z.re()) / 2);
  auto y = exact_sqrt((*modulus - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  Rational yy = sgn(z.im()) < 0 ? Rational(-*y) : *y;
  return GaussianRational(*x, yy);
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::ostringstream os;
  if (sgn(z.re()) != 0) {
    os << to_string(z.re()) << (sgn(z.im()) < 0 ? "-" : "+");
    os << to_string(abs(z.im())) << "i";
  } else {
    os << to_string(z.im()) << "i";
  }
  return os.str();
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s = trimmed(text);
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty scalar");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  auto imag_part = [](std::string t) -> Rational {
    t = trimmed(t);
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return GaussianRational(Rational(0), imag_part(body));
  return GaussianRational(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace merostat::exact
