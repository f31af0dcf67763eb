// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace vacindex {

using cdouble = std::complex<double>;

/// Dense 2x2 complex matrix, row major: [[a, b], [c, d]].
struct Mat2 {
  cdouble a{0.0}, b{0.0}, c{0.0}, d{0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  /// Off-diagonal matrix [[0, u], [v, 0]].
  static Mat2 off_diagonal(cdouble u, cdouble v) { return {0.0, u, v, 0.0}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(cdouble s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }

  cdouble trace() const { return a + d; }
  cdouble det() const { return a * d - b * c; }

  Mat2 adjoint() const {  // conjugate transpose
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  Mat2 conjugate() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }

  /// Inverse via the adjugate; intended for well-conditioned unimodular use.
  Mat2 inverse() const {
    const cdouble dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
};

inline double max_abs(const Mat2& m) { return m.max_abs(); }

/// <X,Y> = -1/2 trace(XY) gives the round metric on su(2); this returns
/// |X|^2 = -1/2 trace(X^2), real part (imaginary part is rounding noise).
inline double su2_norm_sq(const Mat2& x) { return std::real(-0.5 * (x * x).trace()); }

namespace detail {

// Analytic scalar functions of p = w^2:
//   coshf(p) = cosh(w),  sinhc(p) = sinh(w)/w,  dsinhc(p) = d/dp sinhc(p).
// The series branch avoids 0/0 near p = 0.
inline cdouble cosh_of_sq(cdouble p) {
  if (std::abs(p) < 1e-12) return 1.0 + p / 2.0 + p * p / 24.0 + p * p * p / 720.0;
  const cdouble w = std::sqrt(p);
  return std::cosh(w);
}

inline cdouble sinhc_of_sq(cdouble p) {
  if (std::abs(p) < 1e-12) return 1.0 + p / 6.0 + p * p / 120.0 + p * p * p / 5040.0;
  const cdouble w = std::sqrt(p);
  return std::sinh(w) / w;
}

inline cdouble dsinhc_of_sq(cdouble p) {
  if (std::abs(p) < 1e-8)
    return 1.0 / 6.0 + p / 60.0 + p * p / 2520.0 + p * p * p / 181440.0;
  return (cosh_of_sq(p) - sinhc_of_sq(p)) / (2.0 * p);
}

}  // namespace detail

/// exp(M) for off-diagonal M = [[0, u], [v, 0]]:
///   exp(M) = cosh(w) I + sinh(w)/w M with w^2 = u v,
/// with the series limit at u v -> 0.
inline Mat2 exp_off_diagonal(cdouble u, cdouble v) {
  const cdouble p = u * v;
  const cdouble ch = detail::cosh_of_sq(p);
  const cdouble sc = detail::sinhc_of_sq(p);
  return {ch, sc * u, sc * v, ch};
}

/// Directional derivative of exp(M(t)) for off-diagonal M with entries
/// (u, v) and entry velocities (du, dv):
///   d exp = C'(p) p' I + S'(p) p' M + S(p) M'.
inline Mat2 exp_off_diagonal_derivative(cdouble u, cdouble v, cdouble du, cdouble dv) {
  const cdouble p = u * v;
  const cdouble dp = du * v + u * dv;
  const cdouble sc = detail::sinhc_of_sq(p);
  const cdouble dch = 0.5 * sc * dp;            // d/dt cosh(w)
  const cdouble dsc = detail::dsinhc_of_sq(p) * dp;
  return {dch, dsc * u + sc * du, dsc * v + sc * dv, dch};
}

inline double unitarity_residual(const Mat2& m) {
  return max_abs(m * m.adjoint() - Mat2::identity());
}

inline double det_residual(const Mat2& m) { return std::abs(m.det() - 1.0); }

}  // namespace vacindex
