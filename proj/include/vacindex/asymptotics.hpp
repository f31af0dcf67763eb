// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "vacindex/spectrum.hpp"

namespace vacindex {

/// A(x) = #{ (k,l) : Q(k,l) < x }; leading term 2 pi x / sqrt(D).
template <class S>
long long counting_function(const ThetaForm<S>& form, const S& x, double tol = 1e-9) {
  return count_lattice_points(form, x, CountMode::Strict, tol).interior;
}

template <class S>
double counting_leading_term(const ThetaForm<S>& form, double x) {
  return 2.0 * kPi * x / std::sqrt(to_double(form.discriminant()));
}

/// One row of the index/energy ratio table along a frequency ray.
struct RatioSample {
  long long t = 0;
  long long n = 0;
  long long m = 0;
  double energy = 0.0;
  long long index = 0;
  double ratio = 0.0;  // index / energy
  double limit = 0.0;  // 1 / (2 pi sin^2 angle(w1, w2))
};

/// Samples (n, m) = t (n0, m0) for t = 1..steps. The limit column is the
/// closed-form value 1 / (2 pi sin^2 angle), which the ratio approaches for
/// the printed theta; the dual form approaches 1 / (2 pi) instead, so on
/// oblique lattices the two columns diverge visibly by design.
template <class S>
std::vector<RatioSample> ratio_table(const TorusLattice<S>& lat, long long n0, long long m0,
                                     long long steps, ThetaVariant variant, double tol = 1e-9) {
  if (n0 == 0 && m0 == 0) throw Error("ratio_table: ray must be nonzero");
  if (steps < 1) throw Error("ratio_table: steps must be >= 1");
  const double sin_angle = std::sin(lat.angle());
  const double limit = 1.0 / (2.0 * kPi * sin_angle * sin_angle);
  std::vector<RatioSample> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (long long t = 1; t <= steps; ++t) {
    const VacuumSolution<S> vs = build(lat, t * n0, t * m0);
    const auto r = index_nullity(vs, variant, tol);
    RatioSample row;
    row.t = t;
    row.n = t * n0;
    row.m = t * m0;
    row.energy = vs.energy();
    row.index = r.index;
    row.ratio = static_cast<double>(r.index) / row.energy;
    row.limit = limit;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vacindex
