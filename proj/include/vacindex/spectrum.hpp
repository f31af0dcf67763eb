// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "vacindex/errors.hpp"
#include "vacindex/lattice.hpp"
#include "vacindex/vacuum.hpp"

namespace vacindex {

using LatticePoint = std::pair<long long, long long>;

enum class CountMode { Strict, Equal };

/// Result of classifying integer points against an ellipse level set.
template <class S>
struct LatticeCount {
  long long interior = 0;                 // # { Q(k,l) < level - band }
  std::vector<LatticePoint> boundary;     // { |Q(k,l) - level| <= band }, sorted
  bool exact = is_exact_v<S>;
  /// Float backend only: boundary membership could not be certified, the
  /// listed points merely lie inside the tolerance band.
  bool inexact_boundary = false;
};

namespace detail {

/// Half-width of the enumeration box in k for Q <= level:
/// Q(k,l) >= D k^2 / (4c), so k^2 <= 4 c level / D (and symmetrically in l).
template <class S>
long long box_bound(const S& four_coeff_level_over_d) {
  if constexpr (is_exact_v<S>) {
    if (four_coeff_level_over_d < 0) return 0;
    return floor_sqrt(four_coeff_level_over_d).template convert_to<long long>();
  } else {
    if (!(four_coeff_level_over_d > 0)) return 0;
    return static_cast<long long>(std::floor(std::sqrt(four_coeff_level_over_d) + 1e-9)) + 1;
  }
}

template <class S>
void check_positive_definite(const ThetaForm<S>& form) {
  if (!(form.a > S(0)) || !(form.discriminant() > S(0)))
    throw NonPositiveDefinite("quadratic form is not positive definite");
}

}  // namespace detail

/// Enumerates the box |k| <= sqrt(4c L / D), |l| <= sqrt(4a L / D) with
/// L = level + band and classifies every point. band = 0 on the exact
/// backend; tol-relative band on the float backend.
template <class S>
LatticeCount<S> classify_lattice_points(const ThetaForm<S>& form, const S& level,
                                        double tol = 1e-9) {
  detail::check_positive_definite(form);
  if (level < S(0)) throw Error("level must be non-negative");

  const S band = comparison_band(level, tol);
  const S bound_level = level + band;
  const S d = form.discriminant();
  const long long kmax = detail::box_bound(S(4) * form.c * bound_level / d);
  const long long lmax = detail::box_bound(S(4) * form.a * bound_level / d);

  LatticeCount<S> out;
  for (long long k = -kmax; k <= kmax; ++k) {
    for (long long l = -lmax; l <= lmax; ++l) {
      const S q = form(k, l);
      if (q < level - band) {
        ++out.interior;
      } else if (q <= level + band) {
        out.boundary.emplace_back(k, l);
      }
    }
  }
  std::sort(out.boundary.begin(), out.boundary.end());
  out.inexact_boundary = !is_exact_v<S> && !out.boundary.empty();
  return out;
}

/// Level-set point counting. Strict returns #{Q < level}; Equal returns
/// the level set {Q = level} (tolerance-banded on the float backend).
template <class S>
LatticeCount<S> count_lattice_points(const ThetaForm<S>& form, const S& level,
                                     CountMode mode, double tol = 1e-9) {
  LatticeCount<S> c = classify_lattice_points(form, level, tol);
  if (mode == CountMode::Strict) c.boundary.clear();
  return c;
}

/// Ellipse level of the vacuum solution (dimensionless, in theta units).
template <class S>
S threshold(const VacuumSolution<S>& vs) {
  return vs.threshold();
}

/// Index and nullity by the closed-form count: index = #{theta < threshold},
/// nullity = 1 + #{theta = threshold}. The "+1" is the constant mode
/// spanning ker ad_A o ad_conj(A) inside m.
template <class S>
struct IndexNullityResult {
  long long index = 0;
  long long nullity = 1;
  long long nullity_min = 1;
  long long nullity_max = 1;
  S threshold{};
  long long interior_points = 0;
  std::vector<LatticePoint> boundary_points;
  ThetaVariant variant = ThetaVariant::Paper;
  bool exact = is_exact_v<S>;
  /// Float backend: boundary membership not certifiable; nullity is the
  /// bracket [nullity_min, nullity_max] and `nullity` its upper estimate.
  bool inexact_boundary = false;
};

template <class S>
IndexNullityResult<S> index_nullity(const VacuumSolution<S>& vs, ThetaVariant variant,
                                    double tol = 1e-9) {
  const ThetaForm<S> form = theta_form(vs.lattice, variant);
  const S level = vs.threshold();
  const LatticeCount<S> count = classify_lattice_points(form, level, tol);

  IndexNullityResult<S> r;
  r.threshold = level;
  r.variant = variant;
  r.interior_points = count.interior;
  r.boundary_points = count.boundary;
  r.index = count.interior;
  r.nullity = 1 + static_cast<long long>(count.boundary.size());
  r.exact = count.exact;
  r.inexact_boundary = count.inexact_boundary;
  if (count.exact || count.boundary.empty()) {
    r.nullity_min = r.nullity_max = r.nullity;
  } else {
    r.nullity_min = 1;
    r.nullity_max = r.nullity;
  }
  return r;
}

/// One Fourier mode with its two closed-form eigenvalue branches
/// lambda_- = pi^2 theta - 4 alpha conj(alpha) and lambda_+ = pi^2 theta,
/// each of real multiplicity 1 per lattice point.
template <class S>
struct SpectrumEntry {
  long long k = 0;
  long long l = 0;
  S theta_value{};
  S lambda_minus_over_pi2{};
  S lambda_plus_over_pi2{};

  double lambda_minus() const {
    return to_double(lambda_minus_over_pi2) * std::numbers::pi * std::numbers::pi;
  }
  double lambda_plus() const {
    return to_double(lambda_plus_over_pi2) * std::numbers::pi * std::numbers::pi;
  }
};

/// All modes with lambda_- <= lambda_max (absolute units), ascending by
/// (lambda_-, lambda_+), ties by (k,l). Requires lambda_max > -4 alpha
/// conj(alpha), the bottom of the spectrum.
template <class S>
std::vector<SpectrumEntry<S>> enumerate_spectrum(const VacuumSolution<S>& vs,
                                                 double lambda_max, ThetaVariant variant,
                                                 double tol = 1e-9) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  if (!(lambda_max > -4.0 * vs.alpha_abs_sq() - tol * pi2))
    throw Error("lambda_max must exceed the spectrum bottom -4 alpha conj(alpha)");

  const ThetaForm<S> form = theta_form(vs.lattice, variant);
  const S thr = vs.threshold();
  // Inclusion cut in theta units; widened a whisker so boundary-of-cut modes
  // are kept deterministically.
  const double theta_cut = lambda_max / pi2 + to_double(thr) + 1e-12 * (1.0 + std::fabs(lambda_max / pi2));

  const double d = to_double(form.discriminant());
  const double a = to_double(form.a), c = to_double(form.c);
  const long long kmax =
      theta_cut <= 0 ? 0 : static_cast<long long>(std::floor(std::sqrt(4.0 * c * theta_cut / d) + 1e-9)) + 1;
  const long long lmax =
      theta_cut <= 0 ? 0 : static_cast<long long>(std::floor(std::sqrt(4.0 * a * theta_cut / d) + 1e-9)) + 1;

  std::vector<SpectrumEntry<S>> entries;
  for (long long k = -kmax; k <= kmax; ++k) {
    for (long long l = -lmax; l <= lmax; ++l) {
      const S th = form(k, l);
      if (to_double(th) > theta_cut) continue;
      SpectrumEntry<S> e;
      e.k = k;
      e.l = l;
      e.theta_value = th;
      e.lambda_plus_over_pi2 = th;
      e.lambda_minus_over_pi2 = th - thr;
      entries.push_back(std::move(e));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry<S>& x, const SpectrumEntry<S>& y) {
              if (x.lambda_minus_over_pi2 != y.lambda_minus_over_pi2)
                return x.lambda_minus_over_pi2 < y.lambda_minus_over_pi2;
              return LatticePoint{x.k, x.l} < LatticePoint{y.k, y.l};
            });
  return entries;
}

/// (negative, zero, positive) lambda_- / lambda_+ classification of an
/// entry list, using the same band semantics as the lattice counts.
template <class S>
struct SpectrumCounts {
  long long negative = 0;
  long long zero = 0;
  long long positive = 0;
};

template <class S>
SpectrumCounts<S> classify_entries(const std::vector<SpectrumEntry<S>>& entries,
                                   const S& thr, double tol = 1e-9) {
  SpectrumCounts<S> counts;
  const S band = comparison_band(thr, tol);
  auto classify = [&](const S& lam_over_pi2) {
    if (lam_over_pi2 < -band)
      ++counts.negative;
    else if (lam_over_pi2 <= band)
      ++counts.zero;
    else
      ++counts.positive;
  };
  for (const auto& e : entries) {
    classify(e.lambda_minus_over_pi2);
    classify(e.lambda_plus_over_pi2);
  }
  return counts;
}

}  // namespace vacindex
