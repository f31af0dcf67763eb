// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "vacindex/lattice.hpp"
#include "vacindex/mat2.hpp"

namespace vacindex {

/// Vacuum solution phi_A : T^2 -> S^2 built from the lattice and the
/// frequency integers (n, m).
///
/// All spectral quantities of these maps are rational multiples of pi^2
/// whenever the periods are rational, so the pi factors are kept symbolic:
/// sqrt(alpha beta) = pi * sqrt_ab_over_pi, alpha conj(alpha) = pi^2 *
/// alpha_abs_sq_over_pi2, E = pi^2 * energy_over_pi2. The exact backend
/// stores the coefficients exactly; the float backend stores them as
/// doubles. Immutable after build().
template <class S>
struct VacuumSolution {
  TorusLattice<S> lattice;
  long long n = 0;
  long long m = 0;

  Complex<S> sqrt_ab_over_pi{};   // quantized value of sqrt(alpha beta) / pi
  Complex<S> alpha_over_pi{};     // gauge representative, alpha / pi
  Complex<S> beta_over_pi{};      // gauge representative, beta / pi
  S alpha_abs_sq_over_pi2{};      // alpha conj(alpha) / pi^2
  S energy_over_pi2{};            // E(phi_A) / pi^2

  bool is_constant() const { return sqrt_ab_over_pi.is_zero(); }

  /// Ellipse level separating negative from non-negative lambda_- branches:
  /// E / (pi^2 |conj(w2) w1 - w2 conj(w1)|) = 4 alpha conj(alpha) / pi^2.
  S threshold() const { return S(4) * alpha_abs_sq_over_pi2; }

  double energy() const { return to_double(energy_over_pi2) * std::numbers::pi * std::numbers::pi; }
  double alpha_abs_sq() const {
    return to_double(alpha_abs_sq_over_pi2) * std::numbers::pi * std::numbers::pi;
  }
  cdouble sqrt_ab() const { return std::numbers::pi * to_cd(sqrt_ab_over_pi); }
  cdouble alpha() const { return std::numbers::pi * to_cd(alpha_over_pi); }
  cdouble beta() const { return std::numbers::pi * to_cd(beta_over_pi); }
};

/// Builds the vacuum solution for integers (n, m):
///   sqrt(alpha beta) = pi i (conj(w2) n + conj(w1) m) / (conj(w2) w1 - w2 conj(w1)),
///   E = 4 pi^2 |conj(w2) n + conj(w1) m|^2 / |conj(w2) w1 - w2 conj(w1)|,
/// in the gauge alpha = beta = sqrt(alpha beta) (so [A, conj(A)] = 0 exactly).
/// (0, 0) gives the constant map with zero energy.
template <class S>
VacuumSolution<S> build(const TorusLattice<S>& lat, long long n, long long m) {
  VacuumSolution<S> vs;
  vs.lattice = lat;
  vs.n = n;
  vs.m = m;

  // w = conj(w2) n + conj(w1) m
  const Complex<S> w = scalar_from_int<S>(n) * lat.omega2.conj() +
                       scalar_from_int<S>(m) * lat.omega1.conj();
  // conj(w2) w1 - w2 conj(w1) = -2 i cross, so
  // pi i w / (-2 i cross) = -pi w / (2 cross).
  const S half_inv = S(-1) / (S(2) * lat.cross);
  vs.sqrt_ab_over_pi = half_inv * w;
  vs.alpha_over_pi = vs.sqrt_ab_over_pi;
  vs.beta_over_pi = vs.sqrt_ab_over_pi;
  vs.alpha_abs_sq_over_pi2 = vs.sqrt_ab_over_pi.abs_sq();
  vs.energy_over_pi2 = S(4) * w.abs_sq() / lat.pairing_abs();
  return vs;
}

/// Same map with the gauge rotated: (alpha, beta) -> (alpha e^{i phi},
/// beta e^{-i phi}). alpha beta and |alpha| = |beta| are preserved; all
/// reported quantities must be invariant under this. Float backend only.
inline VacuumSolution<double> with_gauge_phase(const VacuumSolution<double>& vs, double phi) {
  VacuumSolution<double> out = vs;
  const double c = std::cos(phi), s = std::sin(phi);
  const Complex<double> rot{c, s}, roti{c, -s};
  out.alpha_over_pi = rot * vs.alpha_over_pi;
  out.beta_over_pi = roti * vs.beta_over_pi;
  return out;
}

/// A = [[0, alpha], [beta, 0]] and conj(A) = -A^*.
template <class S>
std::pair<Mat2, Mat2> a_matrix(const VacuumSolution<S>& vs) {
  const cdouble al = vs.alpha(), be = vs.beta();
  const Mat2 a = Mat2::off_diagonal(al, be);
  const Mat2 abar = Mat2::off_diagonal(-std::conj(be), -std::conj(al));
  return {a, abar};
}

namespace detail {

/// Entries of z A + conj(z) conj(A) (an off-diagonal matrix).
template <class S>
std::pair<cdouble, cdouble> frame_entries(const VacuumSolution<S>& vs, cdouble z) {
  const cdouble al = vs.alpha(), be = vs.beta();
  const cdouble u = z * al - std::conj(z) * std::conj(be);
  const cdouble v = z * be - std::conj(z) * std::conj(al);
  return {u, v};
}

}  // namespace detail

/// Frame F_A(z) = exp(z A + conj(z) conj(A)); F(z + w_i) = +/- F(z).
template <class S>
Mat2 frame(const VacuumSolution<S>& vs, cdouble z) {
  const auto [u, v] = detail::frame_entries(vs, z);
  return exp_off_diagonal(u, v);
}

/// The Cartan-embedded map phi_A(z) = sigma(F_A) F_A^{-1} = exp(-2 z A - 2 conj(z) conj(A)).
template <class S>
Mat2 evaluate(const VacuumSolution<S>& vs, cdouble z) {
  const auto [u, v] = detail::frame_entries(vs, z);
  return exp_off_diagonal(-2.0 * u, -2.0 * v);
}

/// d/dx and d/dy of phi_A at z, by closed-form differentiation of the
/// 2x2 exponential (no commutation shortcut).
template <class S>
std::pair<Mat2, Mat2> evaluate_derivatives(const VacuumSolution<S>& vs, cdouble z) {
  const cdouble al = vs.alpha(), be = vs.beta();
  const auto [fu, fv] = detail::frame_entries(vs, z);
  const cdouble u = -2.0 * fu, v = -2.0 * fv;
  // u = -2 z alpha + 2 conj(z) conj(beta): du/dx = -2 alpha + 2 conj(beta),
  // du/dy = -2 i alpha - 2 i conj(beta); similarly for v.
  const cdouble i{0.0, 1.0};
  const cdouble ux = -2.0 * al + 2.0 * std::conj(be);
  const cdouble vx = -2.0 * be + 2.0 * std::conj(al);
  const cdouble uy = -2.0 * i * al - 2.0 * i * std::conj(be);
  const cdouble vy = -2.0 * i * be - 2.0 * i * std::conj(al);
  return {exp_off_diagonal_derivative(u, v, ux, vx),
          exp_off_diagonal_derivative(u, v, uy, vy)};
}

/// Point of the fundamental domain in lattice coordinates: z = s w1 + t w2.
template <class S>
cdouble lattice_point(const TorusLattice<S>& lat, double s, double t) {
  return s * to_cd(lat.omega1) + t * to_cd(lat.omega2);
}

/// Cartan-image coordinates on S^2 in R^3: W = phi Q is a unitary Hermitian
/// involution n . sigma_Pauli; returns the unit vector n.
inline std::array<double, 3> sphere_point(const Mat2& phi) {
  // W = phi * diag(1, -1), made exactly traceless before reading coordinates.
  Mat2 w{phi.a, -phi.b, phi.c, -phi.d};
  const cdouble half_tr = 0.5 * w.trace();
  w.a -= half_tr;
  w.d -= half_tr;
  const double zc = std::real(w.a);
  const double xc = 0.5 * (std::real(w.b) + std::real(w.c));
  const double yc = 0.5 * (std::imag(w.c) - std::imag(w.b));
  return {xc, yc, zc};
}

}  // namespace vacindex
