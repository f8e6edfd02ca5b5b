// merostat command line front end.
//
//   merostat regularity --input system.json
//   merostat kernel-poly --coeffs 0,0,1
//   merostat sigma p5 --xmin 0.5 --xmax 6 --n 200 --csv trace.csv
//   merostat sigma p3 --alpha 1 --xmin 0.5 --xmax 5 --n 128
//   merostat continue --kernel sine --gamma -1 --rect 0.5,2.5,-0.5,0.5
//   merostat verify-all
//
// Exit status: 0 on success, 1 when a verification fails, 2 on malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "merostat/acceptance/acceptance.hpp"
#include "merostat/error.hpp"
#include "merostat/fredholm/continuation.hpp"
#include "merostat/fredholm/ode_residual.hpp"
#include "merostat/io/json_report.hpp"
#include "merostat/opid/resolvent.hpp"
#include "merostat/singular/classify.hpp"

namespace {

using merostat::Error;
using merostat::ErrorCode;
using merostat::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitMalformed = 2;

/// Writes to `path`, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------

struct RegularityArgs {
  std::string input = "-";
  std::string out;
  int order = 0;
};

int run_regularity(const RegularityArgs& a) {
  const auto system = merostat::io::parse_laurent(parse_json(read_all(a.input)));
  const auto rep = merostat::singular::strong_regularity_classify(
      system, a.order > 0 ? std::optional<int>(a.order) : std::nullopt);
  Json j;
  j["input"] = merostat::io::to_json(system);
  j["report"] = merostat::io::to_json(rep);
  emit(a.out, merostat::io::dump(j) + "\n");
  // Any verdict is a successful classification.
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct KernelPolyArgs {
  std::string coeffs;
  std::string out;
};

int run_kernel_poly(const KernelPolyArgs& a) {
  std::vector<merostat::exact::Rational> c;
  for (const auto& s : split(a.coeffs, ',')) c.push_back(merostat::exact::parse_rational(s));
  if (c.empty()) throw Error(ErrorCode::MalformedInput, "no kernel coefficients");
  const auto b = merostat::opid::poly_kernel_resolvent(merostat::opid::RPoly(c));
  const Json j = merostat::io::kernel_poly_json(b);
  emit(a.out, merostat::io::dump(j) + "\n");
  for (const auto& [name, ok] : j["verification"].items())
    if (!ok.get<bool>()) return kExitVerification;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SigmaArgs {
  double xmin = 0.5, xmax = 6.0, alpha = 0.0;
  int n = 200;
  int quad = 120;
  std::string scheme = "fd4";
  std::string csv;
  std::string json;
  bool timings = false;
};

int run_sigma(const SigmaArgs& a, bool p3) {
  using namespace merostat::fredholm;
  if (!(a.xmin > 0) || !(a.xmax > a.xmin)) throw Error(ErrorCode::InvalidArgument, "need 0 < xmin < xmax");
  const DiffScheme scheme = a.scheme == "chebyshev" ? DiffScheme::Chebyshev : DiffScheme::FD4;
  const auto t0 = std::chrono::steady_clock::now();
  SigmaTrace trace = p3 ? p3_trace(a.alpha, a.xmin, a.xmax, a.n, scheme, a.quad)
                        : p5_trace(a.xmin, a.xmax, a.n, scheme, a.quad);
  merostat::io::IdentityCheck check;
  check.name = p3 ? "third Painleve sigma-form residual" : "fifth Painleve sigma-form residual";
  check.max_error = ode_residual(trace, p3 ? Equation::P3 : Equation::P5, a.alpha);
  check.tolerance = p3 ? 1e-5 : 1e-6;
  check.n = a.n;
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream csv;
  merostat::io::write_trace_csv(csv, trace);
  Json j = merostat::io::to_json(check, a.timings);
  j["equation"] = p3 ? "P3" : "P5";
  j["alpha"] = a.alpha;
  j["xmin"] = a.xmin;
  j["xmax"] = a.xmax;
  j["scheme"] = to_string(scheme);
  j["quadrature"] = a.quad;
  if (a.csv.empty()) {
    // CSV on stdout, report on stderr, unless the report has its own file.
    std::cout << csv.str();
    if (a.json.empty()) std::cerr << merostat::io::dump(j) << "\n";
  } else {
    emit(a.csv, csv.str());
  }
  if (!a.json.empty() || !a.csv.empty()) emit(a.json, merostat::io::dump(j) + "\n");
  return check.pass() ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------

struct ContinueArgs {
  std::string kernel = "sine";
  double gamma = -1.0, alpha = 0.0;
  std::string rect = "0.5,2.5,-0.5,0.5";
  std::string fg = "epi";
  int nx = 21, ny = 11, cells_x = 4, cells_y = 2, n = 120;
  std::string csv;
  std::string out;
};

int run_continue(const ContinueArgs& a) {
  using namespace merostat::fredholm;
  const auto parts = split(a.rect, ',');
  if (parts.size() != 4) throw Error(ErrorCode::MalformedInput, "--rect needs re_min,re_max,im_min,im_max");
  Rect r;
  try {
    r = Rect{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3])};
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "bad number in --rect");
  }
  SmoothKernel k = a.kernel == "sine"    ? SmoothKernel::sine(a.gamma)
                   : a.kernel == "airy"  ? SmoothKernel::airy(a.gamma)
                   : a.kernel == "bessel" ? SmoothKernel::bessel(a.gamma, a.alpha)
                                          : throw Error(ErrorCode::MalformedInput, "unknown kernel " + a.kernel);
  const Fn one = [](cplx) { return cplx(1.0); };
  const Fn epi = [](cplx x) { return std::exp(cplx(0.0, std::numbers::pi) * x); };
  const Fn& f = a.fg == "one" ? one : epi;
  const auto map = analytic_continuation_probe(k, r, f, f, ProbeOptions{a.nx, a.ny, a.cells_x, a.cells_y, a.n});
  if (!a.csv.empty()) {
    std::ostringstream csv;
    merostat::io::write_continuation_csv(csv, map);
    emit(a.csv, csv.str());
  }
  Json j;
  j["kernel"] = k.describe();
  j["rect"] = {r.re_min, r.re_max, r.im_min, r.im_max};
  j["nx"] = map.nx;
  j["ny"] = map.ny;
  Json poles = Json::array();
  for (const auto& p : map.poles) poles.push_back(merostat::io::to_json(p));
  j["poles"] = std::move(poles);
  emit(a.out, merostat::io::dump(j) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_verify_all(const std::vector<int>& only) {
  int failed = 0;
  for (const auto& r : merostat::acceptance::run_acceptance(only)) {
    std::cout << merostat::acceptance::format_line(r) << std::endl;
    failed += !r.pass;
  }
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong regularity, operator identities and Fredholm determinants"};
  app.require_subcommand(1);

  RegularityArgs reg;
  auto* c_reg = app.add_subcommand("regularity", "Classify a matrix Laurent system at its center");
  c_reg->add_option("--input,-i", reg.input, "JSON file with the Laurent data ('-' for stdin)");
  c_reg->add_option("--order,-K", reg.order, "Truncation order K (default: automatic)");
  c_reg->add_option("--out,-o", reg.out, "Output JSON file (default: stdout)");

  KernelPolyArgs kp;
  auto* c_kp = app.add_subcommand("kernel-poly", "Exact resolvent data for an even polynomial kernel");
  c_kp->add_option("--coeffs", kp.coeffs, "Kernel coefficients, lowest degree first, e.g. 0,0,1")->required();
  c_kp->add_option("--out,-o", kp.out, "Output JSON file (default: stdout)");

  SigmaArgs sg;
  auto* c_sigma = app.add_subcommand("sigma", "Sigma trace and sigma-form Painleve residual");
  c_sigma->require_subcommand(1);
  auto add_sigma_options = [&](CLI::App* c) {
    c->add_option("--xmin", sg.xmin, "Left end of the trace");
    c->add_option("--xmax", sg.xmax, "Right end of the trace");
    c->add_option("--n", sg.n, "Number of trace points (at least 64)");
    c->add_option("--quad", sg.quad, "Gauss-Legendre order of the Nystrom discretization");
    c->add_option("--scheme", sg.scheme, "Derivative scheme")->check(CLI::IsMember({"fd4", "chebyshev"}));
    c->add_option("--csv", sg.csv, "Trace CSV file (default: stdout)");
    c->add_option("--json", sg.json, "Identity-check JSON file");
    c->add_flag("--timings", sg.timings, "Include the runtime in the JSON report");
  };
  auto* c_p5 = c_sigma->add_subcommand("p5", "Sine kernel, fifth Painleve equation");
  add_sigma_options(c_p5);
  auto* c_p3 = c_sigma->add_subcommand("p3", "Bessel kernel, third Painleve equation");
  add_sigma_options(c_p3);
  c_p3->add_option("--alpha", sg.alpha, "Bessel order alpha > -1");

  ContinueArgs ct;
  auto* c_cont = app.add_subcommand("continue", "Sigma map and pole candidates over a complex rectangle");
  c_cont->add_option("--kernel", ct.kernel, "sine, airy or bessel");
  c_cont->add_option("--gamma", ct.gamma, "Kernel coupling");
  c_cont->add_option("--alpha", ct.alpha, "Bessel order");
  c_cont->add_option("--rect", ct.rect, "re_min,re_max,im_min,im_max");
  c_cont->add_option("--fg", ct.fg, "f = g = 1 or e^{i pi x}")->check(CLI::IsMember({"one", "epi"}));
  c_cont->add_option("--nx", ct.nx, "Grid points along the real direction");
  c_cont->add_option("--ny", ct.ny, "Grid points along the imaginary direction");
  c_cont->add_option("--cells-x", ct.cells_x, "Argument-principle cells along the real direction");
  c_cont->add_option("--cells-y", ct.cells_y, "Argument-principle cells along the imaginary direction");
  c_cont->add_option("--n", ct.n, "Gauss-Legendre order");
  c_cont->add_option("--csv", ct.csv, "Sigma map CSV file");
  c_cont->add_option("--out,-o", ct.out, "Pole-candidate JSON file (default: stdout)");

  std::vector<int> only;
  auto* c_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  c_all->add_option("--only", only, "Criterion numbers to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (c_reg->parsed()) return run_regularity(reg);
    if (c_kp->parsed()) return run_kernel_poly(kp);
    if (c_p5->parsed()) return run_sigma(sg, false);
    if (c_p3->parsed()) return run_sigma(sg, true);
    if (c_cont->parsed()) return run_continue(ct);
    if (c_all->parsed()) return run_verify_all(only);
  } catch (const Error& e) {
    std::cerr << "merostat: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
