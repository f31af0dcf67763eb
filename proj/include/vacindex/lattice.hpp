// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "vacindex/complex2.hpp"
#include "vacindex/errors.hpp"
#include "vacindex/scalar.hpp"

namespace vacindex {

/// Which binary quadratic form indexes the Fourier modes.
///
/// Paper:  theta(k,l) = (k w1x/|w1|^2 + l w2x/|w2|^2)^2
///                    + (k w1y/|w1|^2 + l w2y/|w2|^2)^2,
///         the form printed with the non-orthogonal Fourier basis.
/// Dual:   |k u + l v|^2 for the basis (u, v) dual to (w1, w2) as plane
///         vectors; the exponentials e^{2 pi i (k s + l t)} it indexes are
///         doubly periodic on every lattice.
/// The two coincide exactly when w1 . w2 = 0.
enum class ThetaVariant { Paper, Dual };

inline const char* variant_name(ThetaVariant v) {
  return v == ThetaVariant::Paper ? "paper" : "dual";
}

/// Period lattice of the torus. Immutable after validate().
template <class S>
struct TorusLattice {
  Complex<S> omega1;
  Complex<S> omega2;
  /// cross = w1x*w2y - w1y*w2x; |cross| is the fundamental-domain area and
  /// |conj(w2) w1 - w2 conj(w1)| = 2 |cross|.
  S cross{};

  S area_sq() const { return cross * cross; }
  double area() const { return std::fabs(to_double(cross)); }

  /// |conj(w2) w1 - w2 conj(w1)|, exactly 2*area.
  S pairing_abs() const { return S(2) * scalar_abs(cross); }

  /// Angle between the periods, in (0, pi). Float-valued on both backends.
  double angle() const {
    const double dot = to_double(omega1.re * omega2.re + omega1.im * omega2.im);
    const double n1 = std::sqrt(to_double(omega1.abs_sq()));
    const double n2 = std::sqrt(to_double(omega2.abs_sq()));
    return std::acos(std::clamp(dot / (n1 * n2), -1.0, 1.0));
  }
};

/// Checks real-linear independence of the periods and builds the lattice.
/// On the float backend "zero area" means |cross| below tol relative to the
/// period magnitudes.
template <class S>
TorusLattice<S> validate(const Complex<S>& omega1, const Complex<S>& omega2,
                         double tol = 1e-9) {
  if constexpr (!is_exact_v<S>) {
    if (!std::isfinite(omega1.re) || !std::isfinite(omega1.im) ||
        !std::isfinite(omega2.re) || !std::isfinite(omega2.im))
      throw DegenerateLattice("periods must be finite");
  }
  S cross = omega1.re * omega2.im - omega1.im * omega2.re;
  bool degenerate;
  if constexpr (is_exact_v<S>) {
    degenerate = (cross == S(0)) || omega1.is_zero() || omega2.is_zero();
  } else {
    const double scale = std::sqrt(to_double(omega1.abs_sq()) * to_double(omega2.abs_sq()));
    degenerate = std::fabs(to_double(cross)) <= tol * std::max(1.0, scale);
  }
  if (degenerate)
    throw DegenerateLattice("degenerate lattice: periods are real-linearly dependent");
  return TorusLattice<S>{omega1, omega2, cross};
}

template <class S>
TorusLattice<S> scale_lattice(const TorusLattice<S>& lat, const Complex<S>& c) {
  return validate<S>(c * lat.omega1, c * lat.omega2);
}

/// Positive-definite binary quadratic form Q(k,l) = a k^2 + b k l + c l^2.
template <class S>
struct ThetaForm {
  S a{}, b{}, c{};
  ThetaVariant variant = ThetaVariant::Paper;

  S discriminant() const { return S(4) * a * c - b * b; }

  S operator()(long long k, long long l) const {
    S ks = scalar_from_int<S>(k), ls = scalar_from_int<S>(l);
    return a * ks * ks + b * ks * ls + c * ls * ls;
  }
};

/// Builds the mode form for the chosen variant.
template <class S>
ThetaForm<S> theta_form(const TorusLattice<S>& lat, ThetaVariant variant) {
  const S n1 = lat.omega1.abs_sq();
  const S n2 = lat.omega2.abs_sq();
  const S dot = lat.omega1.re * lat.omega2.re + lat.omega1.im * lat.omega2.im;
  ThetaForm<S> f;
  f.variant = variant;
  if (variant == ThetaVariant::Paper) {
    f.a = S(1) / n1;
    f.c = S(1) / n2;
    f.b = S(2) * dot / (n1 * n2);
  } else {
    // Inverse-Gram form: adj(G)/det(G) with G = [[|w1|^2, w1.w2], [w1.w2, |w2|^2]].
    const S det = lat.area_sq();
    f.a = n2 / det;
    f.c = n1 / det;
    f.b = S(-2) * dot / det;
  }
  return f;
}

template <class S>
S theta(const ThetaForm<S>& form, long long k, long long l) {
  return form(k, l);
}

}  // namespace vacindex
