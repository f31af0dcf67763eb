// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: index/nullity counts, closed-form spectra,
// oracle verification, counting asymptotics, and map sampling.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vacindex/vacindex.hpp"

namespace {

using namespace vacindex;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;

struct Config {
  std::string omega1;
  std::string omega2;
  long long n = 1;
  long long m = 0;
  std::string variant = "auto";  // paper | dual | both | auto
  std::string format = "text";   // text | json | csv
  double tolerance = 1e-9;
  int grid = 0;      // 0 = per-check default
  long long box = 0;  // 0 = automatic fourier box
  std::string output;

  // subcommand-specific
  double lambda_max = 0.0;
  long long steps = 40;
  int resolution = 32;
  std::vector<std::string> checks;
};

struct ComplexTokens {
  std::string re, im;
};

ComplexTokens split_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("complex value '" + text + "' must be 're,im'");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

bool token_is_rational(const std::string& t) { return looks_rational(t); }

double parse_double_token(const std::string& t) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("cannot parse '" + t +
                     "' (rationals like 3/2 or decimals; symbolic tokens such as sqrt(3) are "
                     "not accepted, supply decimals)");
  }
}

/// True when every component of both periods is exact-rational syntax.
bool exact_backend(const Config& cfg) {
  const auto o1 = split_complex(cfg.omega1), o2 = split_complex(cfg.omega2);
  return token_is_rational(o1.re) && token_is_rational(o1.im) && token_is_rational(o2.re) &&
         token_is_rational(o2.im);
}

template <class S>
Complex<S> parse_complex(const std::string& text) {
  const auto t = split_complex(text);
  if constexpr (is_exact_v<S>) {
    return {parse_rational(t.re), parse_rational(t.im)};
  } else {
    return {parse_double_token(t.re), parse_double_token(t.im)};
  }
}

template <class S>
bool is_rectangular(const TorusLattice<S>& lat, double tol) {
  const S dot = lat.omega1.re * lat.omega2.re + lat.omega1.im * lat.omega2.im;
  if constexpr (is_exact_v<S>) {
    return dot == S(0);
  } else {
    const double scale = std::sqrt(to_double(lat.omega1.abs_sq()) * to_double(lat.omega2.abs_sq()));
    return std::fabs(to_double(dot)) <= tol * std::max(1.0, scale);
  }
}

template <class S>
std::vector<ThetaVariant> resolve_variants(const Config& cfg, const TorusLattice<S>& lat) {
  if (cfg.variant == "paper") return {ThetaVariant::Paper};
  if (cfg.variant == "dual") return {ThetaVariant::Dual};
  if (cfg.variant == "both") return {ThetaVariant::Paper, ThetaVariant::Dual};
  if (cfg.variant == "auto") {
    if (is_rectangular(lat, cfg.tolerance)) return {ThetaVariant::Paper};
    return {ThetaVariant::Paper, ThetaVariant::Dual};
  }
  throw ParseError("unknown variant '" + cfg.variant + "'");
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + cfg.output + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

template <class S>
std::string count_text(const VacuumSolution<S>& vs, const IndexNullityResult<S>& r) {
  std::ostringstream os;
  os << "variant " << variant_name(r.variant) << (r.exact ? " (exact)" : " (float)") << "\n";
  os << "  index      " << r.index << "\n";
  if (r.nullity_min == r.nullity_max) {
    os << "  nullity    " << r.nullity << "\n";
  } else {
    os << "  nullity    " << r.nullity << "  (bracket [" << r.nullity_min << ", "
       << r.nullity_max << "], boundary not certifiable in float)\n";
  }
  os << "  threshold  ";
  if constexpr (is_exact_v<S>)
    os << format_rational(r.threshold);
  else
    os << format_double(to_double(r.threshold));
  os << "\n  energy     ";
  if constexpr (is_exact_v<S>)
    os << energy_string(vs.energy_over_pi2) << " = " << format_double(vs.energy());
  else
    os << format_double(vs.energy());
  os << "\n  boundary   ";
  if (r.boundary_points.empty()) {
    os << "(none)";
  } else {
    for (const auto& [k, l] : r.boundary_points) os << "(" << k << "," << l << ") ";
  }
  os << "\n";
  return os.str();
}

template <class S>
std::string count_csv(const VacuumSolution<S>& vs, const IndexNullityResult<S>& r) {
  std::ostringstream os;
  os << "variant,exact,index,nullity,nullity_min,nullity_max,threshold,energy\n";
  os << variant_name(r.variant) << ',' << (r.exact ? 1 : 0) << ',' << r.index << ','
     << r.nullity << ',' << r.nullity_min << ',' << r.nullity_max << ','
     << format_double(to_double(r.threshold)) << ',' << format_double(vs.energy()) << "\n";
  return os.str();
}

template <class S>
int run_count(const Config& cfg) {
  const auto lat = validate<S>(parse_complex<S>(cfg.omega1), parse_complex<S>(cfg.omega2),
                               cfg.tolerance);
  const auto vs = build(lat, cfg.n, cfg.m);
  const auto variants = resolve_variants(cfg, lat);

  std::string text;
  json jout = json::object();
  for (ThetaVariant v : variants) {
    const auto r = index_nullity(vs, v, cfg.tolerance);
    if (cfg.format == "json") {
      if (variants.size() == 1)
        jout = index_nullity_to_json(vs, r);
      else
        jout[variant_name(v)] = index_nullity_to_json(vs, r);
    } else if (cfg.format == "csv") {
      if (text.empty())
        text = count_csv(vs, r);
      else
        text += count_csv(vs, r).substr(count_csv(vs, r).find('\n') + 1);
    } else {
      text += count_text(vs, r);
    }
  }
  if (cfg.format == "json") text = jout.dump(2) + "\n";
  emit(cfg, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

template <class S>
int run_spectrum(const Config& cfg) {
  const auto lat = validate<S>(parse_complex<S>(cfg.omega1), parse_complex<S>(cfg.omega2),
                               cfg.tolerance);
  const auto vs = build(lat, cfg.n, cfg.m);
  const auto variants = resolve_variants(cfg, lat);

  std::string text;
  json jout = json::object();
  for (ThetaVariant v : variants) {
    const auto entries = enumerate_spectrum(vs, cfg.lambda_max, v, cfg.tolerance);
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& e : entries) arr.push_back(spectrum_entry_to_json(e));
      if (variants.size() == 1)
        jout = {{"variant", variant_name(v)}, {"entries", arr}};
      else
        jout[variant_name(v)] = arr;
    } else if (cfg.format == "csv") {
      text += spectrum_to_csv(entries);
    } else {
      std::ostringstream os;
      os << "variant " << variant_name(v) << ": " << entries.size()
         << " modes with lambda_minus <= " << format_double(cfg.lambda_max) << "\n";
      os << "      k      l        theta  lambda_minus   lambda_plus\n";
      for (const auto& e : entries) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%7lld%7lld%13.6g%14.6g%14.6g\n", e.k, e.l,
                      to_double(e.theta_value), e.lambda_minus(), e.lambda_plus());
        os << buf;
      }
      text += os.str();
    }
  }
  if (cfg.format == "json") text = jout.dump(2) + "\n";
  emit(cfg, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string details;
};

template <class S>
void check_energy(const VacuumSolution<S>& vs, int grid, std::vector<CheckOutcome>& out) {
  const int n = grid > 0 ? grid : 32;
  const double quad = energy_quadrature(vs, n);
  const double closed = vs.energy();
  const double rel = closed == 0.0 ? std::fabs(quad) : std::fabs(quad - closed) / closed;
  CheckOutcome c;
  c.name = "energy";
  c.pass = rel < 1e-8;
  c.details = "quadrature " + format_double(quad) + " vs closed-form " + format_double(closed) +
              " (rel " + format_double(rel) + ", tol 1e-8, N=" + std::to_string(n) + ")";
  out.push_back(c);
}

template <class S>
void check_jacobi(const VacuumSolution<S>& vs, ThetaVariant variant, double tol,
                  std::vector<CheckOutcome>& out) {
  const double scale = 4.0 * vs.alpha_abs_sq();
  const double const_tol = 1e-12 * std::max(1.0, scale);
  const double mode_tol = 1e-9 * std::max(scale, 1e-6);
  const double cres = jacobi_residual(vs, JacobiMode::Constant());
  bool pass = cres < const_tol;
  std::string details = "constant mode " + format_double(cres) + " (tol " +
                        format_double(const_tol) + ")";
  const auto r = index_nullity(vs, ThetaVariant::Dual, tol);
  double worst = 0.0;
  for (const auto& [k, l] : r.boundary_points)
    worst = std::max(worst, jacobi_residual(vs, JacobiMode::Mode(k, l), 16, tol));
  if (!r.boundary_points.empty()) {
    pass = pass && worst < mode_tol;
    details += "; worst of " + std::to_string(r.boundary_points.size()) + " boundary modes " +
               format_double(worst) + " (tol " + format_double(mode_tol) + ")";
  }
  (void)variant;
  out.push_back({"jacobi", pass, details});
}

template <class S>
void check_periodicity(const VacuumSolution<S>& vs, std::vector<CheckOutcome>& out) {
  const MapSanity ms = map_sanity(vs, 100);
  const bool pass = ms.periodicity < 1e-10 && ms.unitarity < 1e-10 && ms.determinant < 1e-10;
  out.push_back({"periodicity", pass,
                 "periodicity " + format_double(ms.periodicity) + ", unitarity " +
                     format_double(ms.unitarity) + ", |det-1| " + format_double(ms.determinant) +
                     " (tol 1e-10, 100 random points)"});
}

template <class S>
void check_harmonicity(const VacuumSolution<S>& vs, int grid, std::vector<CheckOutcome>& out) {
  const int n = grid > 0 ? grid : 64;
  const double res = harmonicity_residual(vs, n);
  const double thr = harmonicity_threshold(vs, n);
  out.push_back({"harmonicity", res < thr,
                 "residual " + format_double(res) + " (tol " + format_double(thr) +
                     ", N=" + std::to_string(n) + ")"});
}

template <class S>
void check_fourier(const VacuumSolution<S>& vs, ThetaVariant variant, long long box, double tol,
                   std::vector<CheckOutcome>& out) {
  const long long need = fourier_box_bound(vs, variant, tol);
  const long long k = box > 0 ? box : need + 1;
  const auto fs = fourier_block_spectrum(vs, k, variant, tol);
  const auto r = index_nullity(vs, variant, tol);
  const bool pass = fs.negative == r.index && fs.zero == r.nullity;
  out.push_back({std::string("fourier[") + variant_name(variant) + "]", pass,
                 "(neg,zero) = (" + std::to_string(fs.negative) + "," + std::to_string(fs.zero) +
                     ") vs closed-form (index,nullity) = (" + std::to_string(r.index) + "," +
                     std::to_string(r.nullity) + "), box " + std::to_string(k)});
}

template <class S>
void check_fd(const VacuumSolution<S>& vs, int grid, double tol,
              std::vector<CheckOutcome>& out) {
  const int n = grid > 0 ? grid : 24;
  const auto fd = fd_spectrum(vs, n);
  const auto paper = index_nullity(vs, ThetaVariant::Paper, tol);
  const auto dual = index_nullity(vs, ThetaVariant::Dual, tol);
  const bool match_paper = fd.negative == paper.index;
  const bool match_dual = fd.negative == dual.index;
  std::string matching = match_paper && match_dual ? "both (variants agree)"
                         : match_paper             ? "paper"
                         : match_dual              ? "dual"
                                                   : "none";
  std::ostringstream os;
  os << "N=" << n << ": (neg,zero) = (" << fd.negative << "," << fd.zero << "), zero band "
     << format_double(fd.zero_band) << "; paper predicts (" << paper.index << ","
     << paper.nullity << "), dual predicts (" << dual.index << "," << dual.nullity
     << "); matching variant: " << matching;
  const long long matched_nullity = match_paper ? paper.nullity : dual.nullity;
  const bool pass = (match_paper || match_dual) && fd.zero == matched_nullity;
  out.push_back({"fd", pass, os.str()});
}

template <class S>
int run_verify(const Config& cfg) {
  const auto lat = validate<S>(parse_complex<S>(cfg.omega1), parse_complex<S>(cfg.omega2),
                               cfg.tolerance);
  const auto vs = build(lat, cfg.n, cfg.m);
  const auto variants = resolve_variants(cfg, lat);

  std::vector<std::string> checks = cfg.checks;
  if (checks.empty()) checks = {"all"};
  const bool all = std::find(checks.begin(), checks.end(), "all") != checks.end();
  auto selected = [&](const char* name) {
    return all || std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  for (const auto& c : checks)
    if (c != "all" && c != "energy" && c != "jacobi" && c != "periodicity" &&
        c != "harmonicity" && c != "fourier" && c != "fd")
      throw ParseError("unknown check '" + c + "'");

  std::vector<CheckOutcome> results;
  if (selected("energy")) check_energy(vs, cfg.grid, results);
  if (selected("jacobi")) check_jacobi(vs, variants.front(), cfg.tolerance, results);
  if (selected("periodicity")) check_periodicity(vs, results);
  if (selected("harmonicity")) check_harmonicity(vs, cfg.grid, results);
  if (selected("fourier"))
    for (ThetaVariant v : variants) check_fourier(vs, v, cfg.box, cfg.tolerance, results);
  if (selected("fd")) check_fd(vs, cfg.grid, cfg.tolerance, results);

  bool pass = true;
  for (const auto& c : results) pass = pass && c.pass;

  std::string text;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& c : results)
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    text = json{{"checks", arr}, {"pass", pass}}.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    text = "check,pass,details\n";
    for (const auto& c : results) {
      std::string d = c.details;
      std::replace(d.begin(), d.end(), ',', ';');
      text += c.name + ',' + (c.pass ? "1" : "0") + ',' + d + '\n';
    }
  } else {
    std::ostringstream os;
    for (const auto& c : results)
      os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.details << "\n";
    os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    text = os.str();
  }
  emit(cfg, text);
  return pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// asymptotics
// ---------------------------------------------------------------------------

template <class S>
int run_asymptotics(const Config& cfg) {
  const auto lat = validate<S>(parse_complex<S>(cfg.omega1), parse_complex<S>(cfg.omega2),
                               cfg.tolerance);
  const auto variants = resolve_variants(cfg, lat);
  std::string text;
  json jout = json::object();
  for (ThetaVariant v : variants) {
    const auto rows = ratio_table(lat, cfg.n, cfg.m, cfg.steps, v, cfg.tolerance);
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(ratio_sample_to_json(r));
      jout[variant_name(v)] = arr;
    } else {
      if (variants.size() > 1) text += std::string("# variant ") + variant_name(v) + "\n";
      text += ratio_table_to_csv(rows);
    }
  }
  if (cfg.format == "json") text = jout.dump(2) + "\n";
  emit(cfg, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// map-sample
// ---------------------------------------------------------------------------

template <class S>
int run_map_sample(const Config& cfg) {
  if (cfg.resolution < 1) throw ParseError("resolution must be >= 1");
  const auto lat = validate<S>(parse_complex<S>(cfg.omega1), parse_complex<S>(cfg.omega2),
                               cfg.tolerance);
  const auto vs = build(lat, cfg.n, cfg.m);
  std::string text = "s,t,X,Y,Z\n";
  for (int i = 0; i < cfg.resolution; ++i) {
    for (int j = 0; j < cfg.resolution; ++j) {
      const double s = static_cast<double>(i) / cfg.resolution;
      const double t = static_cast<double>(j) / cfg.resolution;
      const auto p = sphere_point(evaluate(vs, lattice_point(vs.lattice, s, t)));
      text += format_double(s) + ',' + format_double(t) + ',' + format_double(p[0]) + ',' +
              format_double(p[1]) + ',' + format_double(p[2]) + '\n';
    }
  }
  emit(cfg, text);
  return kExitOk;
}

template <int (*RunExact)(const Config&), int (*RunFloat)(const Config&)>
int dispatch(const Config& cfg) {
  if (exact_backend(cfg)) return RunExact(cfg);
  return RunFloat(cfg);
}

void add_common(CLI::App* cmd, Config& cfg, bool needs_nm = true) {
  cmd->add_option("--omega1", cfg.omega1, "first period as re,im (rationals p/q or decimals)")
      ->required();
  cmd->add_option("--omega2", cfg.omega2, "second period as re,im")->required();
  if (needs_nm) {
    cmd->add_option("-n", cfg.n, "first frequency integer");
    cmd->add_option("-m", cfg.m, "second frequency integer");
  }
  cmd->add_option("--variant", cfg.variant, "theta variant: paper|dual|both|auto")
      ->check(CLI::IsMember({"paper", "dual", "both", "auto"}));
  cmd->add_option("--format", cfg.format, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--tolerance", cfg.tolerance, "relative tolerance for float comparisons");
  cmd->add_option("--output", cfg.output, "write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "index and nullity of vacuum harmonic maps from a flat torus to the round sphere,\n"
      "by ellipse lattice counting with independent spectral verification"};
  app.require_subcommand(1);

  Config cfg;

  CLI::App* count = app.add_subcommand("count", "closed-form index/nullity counts");
  add_common(count, cfg);

  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form eigenvalue table");
  add_common(spectrum, cfg);
  spectrum->add_option("--lambda-max", cfg.lambda_max, "include modes with lambda_minus <= this");

  CLI::App* verify = app.add_subcommand("verify", "run independent oracles");
  add_common(verify, cfg);
  verify->add_option("--check", cfg.checks,
                     "checks: energy|jacobi|periodicity|harmonicity|fourier|fd|all")
      ->delimiter(',');
  verify->add_option("--grid", cfg.grid, "grid size override for energy/harmonicity/fd");
  verify->add_option("--box", cfg.box, "fourier box override");

  CLI::App* asym = app.add_subcommand("asymptotics", "index/energy ratio table along a ray");
  add_common(asym, cfg);
  asym->add_option("--steps", cfg.steps, "number of ray samples");

  CLI::App* sample = app.add_subcommand("map-sample", "sample the map as S^2 points");
  add_common(sample, cfg);
  sample->add_option("--resolution", cfg.resolution, "grid resolution per direction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (count->parsed()) return dispatch<run_count<Rational>, run_count<double>>(cfg);
    if (spectrum->parsed()) return dispatch<run_spectrum<Rational>, run_spectrum<double>>(cfg);
    if (verify->parsed()) return dispatch<run_verify<Rational>, run_verify<double>>(cfg);
    if (asym->parsed()) return dispatch<run_asymptotics<Rational>, run_asymptotics<double>>(cfg);
    if (sample->parsed()) return dispatch<run_map_sample<Rational>, run_map_sample<double>>(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
