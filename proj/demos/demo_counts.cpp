// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal library walkthrough: build a vacuum solution on the square torus,
// read off its index/nullity from the lattice count, and confirm the counts
// against the Fourier-block oracle.

#include <cstdio>

#include "vacindex/vacindex.hpp"

int main() {
  using namespace vacindex;

  // Exact backend: integer periods promote everything to rational arithmetic.
  const auto lattice = validate<Rational>({Rational(1), Rational(0)}, {Rational(0), Rational(1)});

  for (const auto [n, m] : {std::pair<long long, long long>{1, 0}, {1, 1}, {2, 1}}) {
    const auto vs = build(lattice, n, m);
    const auto result = index_nullity(vs, ThetaVariant::Paper);
    std::printf("(n,m)=(%lld,%lld): E = %s = %.6f, threshold %s, index %lld, nullity %lld\n",
                n, m, energy_string(vs.energy_over_pi2).c_str(), vs.energy(),
                format_rational(result.threshold).c_str(), result.index, result.nullity);

    const auto oracle =
        fourier_block_spectrum(vs, fourier_box_bound(vs, ThetaVariant::Paper) + 1,
                               ThetaVariant::Paper);
    std::printf("  fourier oracle: %lld negative, %lld zero eigenvalues\n", oracle.negative,
                oracle.zero);
  }

  // Float backend: decimals select double precision; boundary counts are
  // reported as a bracket because float equality is not certifiable.
  const auto oblique = validate<double>({1.0, 0.0}, {0.5, 0.8660254037844386});
  const auto vs = build(oblique, 1, 1);
  for (ThetaVariant v : {ThetaVariant::Paper, ThetaVariant::Dual}) {
    const auto r = index_nullity(vs, v);
    std::printf("hexagonal (1,1) %s: index %lld, nullity in [%lld, %lld]\n", variant_name(v),
                r.index, r.nullity_min, r.nullity_max);
  }
  return 0;
}
