// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "vacindex/errors.hpp"
#include "vacindex/spectrum.hpp"
#include "vacindex/sym_eigen.hpp"
#include "vacindex/vacuum.hpp"

namespace vacindex {

// ---------------------------------------------------------------------------
// Fourier-block oracle: assembles the raw mode equations
//   (pi^2 theta - 2 a ca - lambda) f_{k,l}            = 2 a cb conj(f_{-k,-l})
//   (pi^2 theta - 2 a ca - lambda) conj(f_{-k,-l})    = 2 ca b f_{k,l}
// as Hermitian 2x2 blocks and diagonalizes them by trace/determinant,
// independently of the solved branch formula.
// ---------------------------------------------------------------------------

template <class S>
struct FourierBlockEntry {
  long long k = 0;
  long long l = 0;
  S theta_value{};
  /// Block eigenvalues in units of pi^2, ascending.
  S eig_lo_over_pi2{};
  S eig_hi_over_pi2{};
};

template <class S>
struct FourierSpectrumResult {
  std::vector<FourierBlockEntry<S>> entries;
  long long negative = 0;
  long long zero = 0;
  long long positive = 0;
  long long box = 0;
};

/// Diagonalizes every block with |k|, |l| <= K. K must cover the enumeration
/// bound for the threshold ellipse, otherwise modes with lambda_- <= 0 could
/// be missed (BoxTooSmall).
template <class S>
FourierSpectrumResult<S> fourier_block_spectrum(const VacuumSolution<S>& vs, long long box,
                                                ThetaVariant variant, double tol = 1e-9) {
  const ThetaForm<S> form = theta_form(vs.lattice, variant);
  const S thr = vs.threshold();
  const S band = comparison_band(thr, tol);
  const S d = form.discriminant();
  const long long need = std::max(detail::box_bound(S(4) * form.c * (thr + band) / d),
                                  detail::box_bound(S(4) * form.a * (thr + band) / d));
  if (box < need)
    throw BoxTooSmall("fourier box " + std::to_string(box) + " < required " +
                      std::to_string(need));

  // Off-diagonal block entry -2 alpha conj(beta) in pi^2 units.
  const Complex<S> ab = vs.alpha_over_pi * vs.beta_over_pi.conj();
  const S off_abs_sq = S(4) * ab.abs_sq();
  const S diag_shift = S(2) * vs.alpha_abs_sq_over_pi2;

  FourierSpectrumResult<S> out;
  out.box = box;
  out.entries.reserve(static_cast<std::size_t>((2 * box + 1) * (2 * box + 1)));
  for (long long k = -box; k <= box; ++k) {
    for (long long l = -box; l <= box; ++l) {
      const S th = form(k, l);
      const S mean = th - diag_shift;
      S radius;
      if constexpr (is_exact_v<S>) {
        const auto r = exact_sqrt(off_abs_sq);
        if (!r)
          throw Error("fourier_block_spectrum: off-diagonal magnitude is not an exact square");
        radius = *r;
      } else {
        radius = std::sqrt(off_abs_sq);
      }
      FourierBlockEntry<S> e;
      e.k = k;
      e.l = l;
      e.theta_value = th;
      e.eig_lo_over_pi2 = mean - radius;
      e.eig_hi_over_pi2 = mean + radius;
      auto classify = [&](const S& lam) {
        if (lam < -band)
          ++out.negative;
        else if (lam <= band)
          ++out.zero;
        else
          ++out.positive;
      };
      classify(e.eig_lo_over_pi2);
      classify(e.eig_hi_over_pi2);
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

/// Smallest box that fourier_block_spectrum accepts for this solution.
template <class S>
long long fourier_box_bound(const VacuumSolution<S>& vs, ThetaVariant variant,
                            double tol = 1e-9) {
  const ThetaForm<S> form = theta_form(vs.lattice, variant);
  const S thr = vs.threshold();
  const S band = comparison_band(thr, tol);
  const S d = form.discriminant();
  return std::max(detail::box_bound(S(4) * form.c * (thr + band) / d),
                  detail::box_bound(S(4) * form.a * (thr + band) / d));
}

// ---------------------------------------------------------------------------
// Finite-difference oracle: discretizes
//   f_xx + f_yy + 8 f a ca + 8 conj(f) a cb = -4 lambda f
// on the periodic grid (s, t) in [0,1)^2, z = s w1 + t w2, as a real
// symmetric operator on (Re f, Im f) of dimension 2 N^2.
// ---------------------------------------------------------------------------

struct FdOperator {
  int n = 0;          // grid points per direction
  std::size_t dim = 0;  // 2 n^2
  /// Sparse symmetric rows: (column, value) pairs.
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;  // dual (inverse-Gram) metric
  double alpha_abs_sq = 0.0;               // a ca, absolute units
  double coupling_re = 0.0, coupling_im = 0.0;  // 8 alpha conj(beta)

  std::vector<double> dense() const {
    std::vector<double> a(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (auto [j, v] : rows[i]) a[i * dim + j] += v;
    return a;
  }

  /// Max-norm of A x for a vector given by (u, v) grid constants; the
  /// imaginary-direction constant is an exact discrete null vector.
  double constant_vector_residual(double u_val, double v_val) const {
    const std::size_t half = dim / 2;
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double s = 0.0;
      for (auto [j, v] : rows[i]) s += v * (j < half ? u_val : v_val);
      worst = std::max(worst, std::fabs(s));
    }
    return worst;
  }

  double max_abs_row_sum() const {
    double worst = 0.0;
    for (const auto& row : rows) {
      double s = 0.0;
      for (auto [j, v] : row) s += std::fabs(v);
      worst = std::max(worst, s);
    }
    return worst;
  }
};

namespace detail {

template <class S>
std::array<double, 3> dual_metric(const TorusLattice<S>& lat) {
  const double n1 = to_double(lat.omega1.abs_sq());
  const double n2 = to_double(lat.omega2.abs_sq());
  const double dot = to_double(lat.omega1.re * lat.omega2.re + lat.omega1.im * lat.omega2.im);
  const double det = to_double(lat.area_sq());
  return {n2 / det, -dot / det, n1 / det};
}

}  // namespace detail

template <class S>
FdOperator build_fd_operator(const VacuumSolution<S>& vs, int n) {
  if (n < 8) throw GridTooCoarse("fd grid must satisfy N >= 8");
  FdOperator op;
  op.n = n;
  op.dim = 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  op.rows.assign(op.dim, {});
  const auto g = detail::dual_metric(vs.lattice);
  op.g11 = g[0];
  op.g12 = g[1];
  op.g22 = g[2];
  op.alpha_abs_sq = vs.alpha_abs_sq();
  const cdouble ab = kPiSq * to_cd(vs.alpha_over_pi * vs.beta_over_pi.conj());
  op.coupling_re = 8.0 * std::real(ab);
  op.coupling_im = 8.0 * std::imag(ab);

  const double h2 = 1.0 / (static_cast<double>(n) * n);  // h^2 with h = 1/n
  const double cs = op.g11 / h2, ct = op.g22 / h2, cx = op.g12 / (2.0 * h2);
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  auto id = [&](int i, int j, int block) {
    const int ii = (i % n + n) % n, jj = (j % n + n) % n;
    return static_cast<std::size_t>(block) * cells + static_cast<std::size_t>(ii) * n + jj;
  };

  // J = (-Lap_h)/4 - (1/4) [[8 aca + c_re, c_im], [c_im, 8 aca - c_re]].
  const double diag_u = -0.25 * (8.0 * op.alpha_abs_sq + op.coupling_re);
  const double diag_v = -0.25 * (8.0 * op.alpha_abs_sq - op.coupling_re);
  const double cross_uv = -0.25 * op.coupling_im;
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto& row = op.rows[id(i, j, b)];
        row.reserve(10);
        row.emplace_back(id(i, j, b), 0.25 * (2.0 * cs + 2.0 * ct) + (b == 0 ? diag_u : diag_v));
        row.emplace_back(id(i + 1, j, b), -0.25 * cs);
        row.emplace_back(id(i - 1, j, b), -0.25 * cs);
        row.emplace_back(id(i, j + 1, b), -0.25 * ct);
        row.emplace_back(id(i, j - 1, b), -0.25 * ct);
        if (cx != 0.0) {
          row.emplace_back(id(i + 1, j + 1, b), -0.25 * cx);
          row.emplace_back(id(i - 1, j - 1, b), -0.25 * cx);
          row.emplace_back(id(i + 1, j - 1, b), 0.25 * cx);
          row.emplace_back(id(i - 1, j + 1, b), 0.25 * cx);
        }
        if (cross_uv != 0.0) row.emplace_back(id(i, j, 1 - b), cross_uv);
      }
    }
  }
  return op;
}

struct FdSpectrumResult {
  int grid = 0;
  std::vector<double> eigenvalues;  // sorted ascending
  long long negative = 0;
  long long zero = 0;
  long long positive = 0;
  double zero_band = 0.0;
  double constant_mode_residual = 0.0;
  double measured_gap = 0.0;       // min |lambda| outside the zero band
  double symbol_error_bound = 0.0;  // discretization shift bound at the threshold shells
};

namespace detail {

/// Exact discrete symbol of (-Lap_h)/4 at integer frequency (k, l).
inline double discrete_quarter_symbol(const FdOperator& op, long long k, long long l) {
  const double n = static_cast<double>(op.n);
  const double h2 = 1.0 / (n * n);
  const double ak = 2.0 * kPi * static_cast<double>(k) / n;
  const double al = 2.0 * kPi * static_cast<double>(l) / n;
  const double sym = op.g11 * (2.0 - 2.0 * std::cos(ak)) + op.g22 * (2.0 - 2.0 * std::cos(al)) +
                     2.0 * op.g12 * std::sin(ak) * std::sin(al);
  return 0.25 * sym / h2;
}

/// Smallest |lambda| over the nonzero closed-form eigenvalues near 0.
template <class S>
double predicted_gap(const VacuumSolution<S>& vs, ThetaVariant variant) {
  const double lam_max = 4.0 * vs.alpha_abs_sq() + kPiSq;
  const auto entries = enumerate_spectrum(vs, lam_max, variant);
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    for (double lam : {e.lambda_minus(), e.lambda_plus()}) {
      const double a = std::fabs(lam);
      if (a > 1e-12 * (1.0 + 4.0 * vs.alpha_abs_sq())) gap = std::min(gap, a);
    }
  }
  return gap;
}

}  // namespace detail

/// Discretizes the mode equation and diagonalizes with the self-contained
/// symmetric solver. The near-zero band is the exact symbol-error bound over
/// the sub-threshold modes (an O(1/N^2) quantity), floored by the measured
/// constant-mode residual and the solver's rounding scale. GridTooCoarse is
/// raised when that band cannot be separated from the closed-form spectral
/// gap around zero (checked for both theta variants).
template <class S>
FdSpectrumResult fd_spectrum(const VacuumSolution<S>& vs, int n,
                             const sym_eigen::Options& opts = {}) {
  const FdOperator op = build_fd_operator(vs, n);

  // Symbol-error bound over modes with theta_dual <= threshold.
  const ThetaForm<S> dual = theta_form(vs.lattice, ThetaVariant::Dual);
  const S thr = vs.threshold();
  const S band_s = comparison_band(thr, 1e-9);
  const S disc = dual.discriminant();
  const long long kb = detail::box_bound(S(4) * dual.c * (thr + band_s) / disc);
  const long long lb = detail::box_bound(S(4) * dual.a * (thr + band_s) / disc);
  double sym_err = 0.0;
  const double thr_d = to_double(thr);
  for (long long k = -kb; k <= kb; ++k) {
    for (long long l = -lb; l <= lb; ++l) {
      if (to_double(dual(k, l)) > thr_d * (1.0 + 1e-9) + 1e-12) continue;
      const double exact_quarter = kPiSq * to_double(dual(k, l));
      const double err = std::fabs(detail::discrete_quarter_symbol(op, k, l) - exact_quarter);
      sym_err = std::max(sym_err, err);
    }
  }

  const double const_res = op.constant_vector_residual(0.0, 1.0);
  const double floor = std::max(1e3 * const_res, 1e-12 * std::max(1.0, op.max_abs_row_sum()));
  const double band = std::max(2.0 * sym_err, floor);

  const double gap = std::min(detail::predicted_gap(vs, ThetaVariant::Paper),
                              detail::predicted_gap(vs, ThetaVariant::Dual));
  if (!(band < 0.5 * gap))
    throw GridTooCoarse("fd grid N=" + std::to_string(n) +
                        " cannot separate the zero band (band " + std::to_string(band) +
                        ", closed-form gap " + std::to_string(gap) + ")");

  FdSpectrumResult out;
  out.grid = n;
  out.zero_band = band;
  out.constant_mode_residual = const_res;
  out.symbol_error_bound = sym_err;
  out.eigenvalues = sym_eigen::symmetric_eigenvalues(op.dense(), op.dim, opts);
  out.measured_gap = std::numeric_limits<double>::infinity();
  for (double lam : out.eigenvalues) {
    if (lam < -band)
      ++out.negative;
    else if (lam <= band)
      ++out.zero;
    else
      ++out.positive;
    if (std::fabs(lam) > band) out.measured_gap = std::min(out.measured_gap, std::fabs(lam));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Energy quadrature: E = 1/2 int |phi^-1 phi_x|^2 + |phi^-1 phi_y|^2 dx dy
// by the periodic trapezoidal rule, derivatives in closed form.
// ---------------------------------------------------------------------------

template <class S>
double energy_quadrature(const VacuumSolution<S>& vs, int n) {
  if (n < 4) throw Error("energy_quadrature: N must be >= 4");
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cdouble z = lattice_point(vs.lattice, (i + 0.0) / n, (j + 0.0) / n);
      const Mat2 phi = evaluate(vs, z);
      const Mat2 inv = phi.inverse();
      const auto [dx, dy] = evaluate_derivatives(vs, z);
      acc += su2_norm_sq(inv * dx) + su2_norm_sq(inv * dy);
    }
  }
  const double mean = acc / (static_cast<double>(n) * n);
  return 0.5 * vs.lattice.area() * mean;
}

/// Max deviation of the quadrature integrand from its mean (the integrand of
/// a vacuum solution is constant).
template <class S>
double energy_integrand_spread(const VacuumSolution<S>& vs, int n) {
  if (n < 4) throw Error("energy_integrand_spread: N must be >= 4");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cdouble z = lattice_point(vs.lattice, (i + 0.0) / n, (j + 0.0) / n);
      const Mat2 phi = evaluate(vs, z);
      const Mat2 inv = phi.inverse();
      const auto [dx, dy] = evaluate_derivatives(vs, z);
      vals.push_back(su2_norm_sq(inv * dx) + su2_norm_sq(inv * dy));
    }
  }
  const double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
  double spread = 0.0;
  for (double v : vals) spread = std::max(spread, std::fabs(v - mean));
  return spread;
}

// ---------------------------------------------------------------------------
// Analytic Jacobi-field residuals.
// ---------------------------------------------------------------------------

struct JacobiMode {
  bool constant = true;
  long long k = 0;
  long long l = 0;

  static JacobiMode Constant() { return {}; }
  static JacobiMode Mode(long long k, long long l) { return {false, k, l}; }
};

/// Applies the reduced Jacobi operator analytically to the constant null
/// mode or to a boundary Fourier mode (dual basis, which is the doubly
/// periodic one) and returns the max-norm of the result over a sample grid.
/// Boundary membership theta(k,l) = threshold is required for Mode.
template <class S>
double jacobi_residual(const VacuumSolution<S>& vs, const JacobiMode& mode,
                       int sample_grid = 16, double tol = 1e-9) {
  const cdouble al = vs.alpha(), be = vs.beta();
  const cdouble a_ca = al * std::conj(al);      // alpha conj(alpha), real
  const cdouble a_cb = al * std::conj(be);      // alpha conj(beta)
  // R(f) = -(1/4) (lap f + 8 aca f + 8 acb conj(f)); lap applied analytically.
  if (mode.constant) {
    cdouble f0{0.0, 1.0};
    if (std::abs(a_cb) > 0.0) {
      // Solve 8 aca f + 8 acb conj(f) = 0: f = i * sqrt(acb/|acb|).
      f0 = cdouble{0.0, 1.0} * std::sqrt(a_cb / std::abs(a_cb));
    }
    const cdouble r = -0.25 * (8.0 * a_ca * f0 + 8.0 * a_cb * std::conj(f0));
    return std::abs(r);
  }

  const ThetaForm<S> dual = theta_form(vs.lattice, ThetaVariant::Dual);
  const S th = dual(mode.k, mode.l);
  const S thr = vs.threshold();
  const S band = comparison_band(thr, tol);
  if (scalar_abs(th - thr) > band)
    throw NotANullMode("theta(k,l) != threshold: mode (" + std::to_string(mode.k) + "," +
                       std::to_string(mode.l) + ") is not a boundary mode");

  const double theta_d = to_double(th);
  if (theta_d == 0.0) return 0.0;  // constant-map boundary {(0,0)}: f constant real

  // Coefficient pairing from the lambda = 0 mode equation:
  // conj(f_{-k,-l}) = (pi^2 theta - 2 aca) / (2 acb) * f_{k,l}.
  const cdouble c1{1.0, 0.0};
  const cdouble c2 = std::conj((kPiSq * theta_d - 2.0 * a_ca) / (2.0 * a_cb) * c1);
  double worst = 0.0;
  for (int i = 0; i < sample_grid; ++i) {
    for (int j = 0; j < sample_grid; ++j) {
      const double s = (i + 0.37) / sample_grid, t = (j + 0.61) / sample_grid;
      const double phase = 2.0 * kPi * (mode.k * s + mode.l * t);
      const cdouble e1 = std::polar(1.0, phase), e2 = std::polar(1.0, -phase);
      const cdouble f = c1 * e1 + c2 * e2;
      const cdouble lap = -4.0 * kPiSq * theta_d * f;
      const cdouble r = -0.25 * (lap + 8.0 * a_ca * f + 8.0 * a_cb * std::conj(f));
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Harmonicity residual at map level:
//   R = d/dzbar (phi^-1 phi_z) + d/dz (phi^-1 phi_zbar)
//     = phi^-1 (phi_xx + phi_yy)/2 - T2 T1 - T1 T2,
// with all derivatives taken by 4th-order centered stencils of step 1/N on
// the embedded map.
// ---------------------------------------------------------------------------

namespace detail {

template <class S>
Mat2 stencil_d1(const VacuumSolution<S>& vs, cdouble z, cdouble dir, double h) {
  const Mat2 p2 = evaluate(vs, z + 2.0 * h * dir);
  const Mat2 p1 = evaluate(vs, z + h * dir);
  const Mat2 m1 = evaluate(vs, z - h * dir);
  const Mat2 m2 = evaluate(vs, z - 2.0 * h * dir);
  return (1.0 / (12.0 * h)) * (((-1.0) * p2) + (8.0 * p1) - (8.0 * m1) + m2);
}

template <class S>
Mat2 stencil_d2(const VacuumSolution<S>& vs, cdouble z, cdouble dir, double h) {
  const Mat2 p2 = evaluate(vs, z + 2.0 * h * dir);
  const Mat2 p1 = evaluate(vs, z + h * dir);
  const Mat2 c0 = evaluate(vs, z);
  const Mat2 m1 = evaluate(vs, z - h * dir);
  const Mat2 m2 = evaluate(vs, z - 2.0 * h * dir);
  return (1.0 / (12.0 * h * h)) *
         (((-1.0) * p2) + (16.0 * p1) - (30.0 * c0) + (16.0 * m1) - m2);
}

}  // namespace detail

template <class S>
double harmonicity_residual(const VacuumSolution<S>& vs, int n, int sample_grid = 7) {
  if (n < 8) throw Error("harmonicity_residual: N must be >= 8");
  const double h = 1.0 / n;
  const cdouble ex{1.0, 0.0}, ey{0.0, 1.0}, icplx{0.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < sample_grid; ++i) {
    for (int j = 0; j < sample_grid; ++j) {
      const cdouble z =
          lattice_point(vs.lattice, (i + 0.31) / sample_grid, (j + 0.47) / sample_grid);
      const Mat2 phi_inv = evaluate(vs, z).inverse();
      const Mat2 px = detail::stencil_d1(vs, z, ex, h);
      const Mat2 py = detail::stencil_d1(vs, z, ey, h);
      const Mat2 pxx = detail::stencil_d2(vs, z, ex, h);
      const Mat2 pyy = detail::stencil_d2(vs, z, ey, h);
      const Mat2 t1 = phi_inv * (0.5 * (px - (icplx * py)));  // phi^-1 phi_z
      const Mat2 t2 = phi_inv * (0.5 * (px + (icplx * py)));  // phi^-1 phi_zbar
      const Mat2 r = (0.5 * (phi_inv * (pxx + pyy))) - (t2 * t1) - (t1 * t2);
      worst = std::max(worst, max_abs(r));
    }
  }
  return worst;
}

/// Pass threshold for the residual check: the stated 1e-6 (1+E) floor or
/// three times the a-priori 4th-order bound h^4 (16 a ca)^3 / 36, whichever
/// is larger.
template <class S>
double harmonicity_threshold(const VacuumSolution<S>& vs, int n) {
  const double freq_sq = 16.0 * vs.alpha_abs_sq();
  const double apriori = freq_sq * freq_sq * freq_sq / 36.0;
  const double h = 1.0 / n;
  return std::max(1e-6 * (1.0 + vs.energy()), 3.0 * apriori * h * h * h * h);
}

// ---------------------------------------------------------------------------
// Map sanity: periodicity, unitarity, unit determinant at random points.
// ---------------------------------------------------------------------------

struct MapSanity {
  double periodicity = 0.0;
  double unitarity = 0.0;
  double determinant = 0.0;
};

template <class S>
MapSanity map_sanity(const VacuumSolution<S>& vs, int samples = 100, unsigned seed = 0x5eed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const cdouble w1 = to_cd(vs.lattice.omega1), w2 = to_cd(vs.lattice.omega2);
  MapSanity out;
  for (int s = 0; s < samples; ++s) {
    const cdouble z = uni(rng) * w1 + uni(rng) * w2;
    const Mat2 phi = evaluate(vs, z);
    out.periodicity = std::max(out.periodicity, max_abs(evaluate(vs, z + w1) - phi));
    out.periodicity = std::max(out.periodicity, max_abs(evaluate(vs, z + w2) - phi));
    out.unitarity = std::max(out.unitarity, unitarity_residual(phi));
    out.determinant = std::max(out.determinant, det_residual(phi));
  }
  return out;
}

}  // namespace vacindex
