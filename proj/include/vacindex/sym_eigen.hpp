// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "vacindex/errors.hpp"

namespace vacindex {

/// Self-contained dense symmetric eigensolvers, eigenvalues only.
/// Row-major full storage: a[i*n + j].
namespace sym_eigen {

struct Options {
  /// Components up to this dimension use cyclic Jacobi rotations; larger
  /// ones use Householder tridiagonalization + implicit-shift QL.
  std::size_t jacobi_limit = 640;
  double jacobi_off_tol = 1e-12;
  std::size_t max_sweeps = 100;
};

inline double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

/// Cyclic-by-row Jacobi rotations; terminates when the off-diagonal norm
/// drops below off_tol * max(1, ||A||_F).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                              const Options& opts = {}) {
  if (n == 0) return {};
  const double stop = opts.jacobi_off_tol * std::max(1.0, frobenius(a));
  std::vector<double> rp(n), rq(n);
  for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    off = std::sqrt(2.0 * off);
    if (off <= stop) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e12) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rows p and q: A <- R^T A (contiguous).
        double* ap = a.data() + p * n;
        double* aq = a.data() + q * n;
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = ap[i], xq = aq[i];
          ap[i] = c * xp - s * xq;
          aq[i] = s * xp + c * xq;
        }
        // Columns p and q: A <- A R.
        for (std::size_t i = 0; i < n; ++i) {
          double* ai = a.data() + i * n;
          const double xp = ai[p], xq = ai[q];
          ai[p] = c * xp - s * xq;
          ai[q] = s * xp + c * xq;
        }
        // Symmetrize the rotated pair against rounding drift.
        a[p * n + q] = a[q * n + p] = 0.5 * (a[p * n + q] + a[q * n + p]);
      }
    }
  }
  throw Error("jacobi_eigenvalues: no convergence within sweep limit");
}

namespace detail {

/// Householder reduction of a full symmetric matrix to tridiagonal form
/// (diagonal d, subdiagonal e with e[i] coupling i and i+1). Destroys a.
inline void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                           std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  if (n == 0) return;
  std::vector<double> v(n), p(n), q(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double scale = 0.0;
    for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
    if (scale == 0.0 || l == 0) {
      e[i] = a[i * n + l];
      continue;
    }
    double h = 0.0;
    for (std::size_t k = 0; k <= l; ++k) {
      v[k] = a[i * n + k] / scale;
      h += v[k] * v[k];
    }
    const double f = v[l];
    const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
    e[i] = scale * g;
    h -= f * g;
    v[l] = f - g;
    // p = A v / h over the leading (l+1) x (l+1) block (contiguous rows).
    for (std::size_t j = 0; j <= l; ++j) {
      const double* aj = a.data() + j * n;
      double s = 0.0;
      for (std::size_t k = 0; k <= l; ++k) s += aj[k] * v[k];
      p[j] = s / h;
    }
    double vp = 0.0;
    for (std::size_t j = 0; j <= l; ++j) vp += v[j] * p[j];
    const double kk = vp / (2.0 * h);
    for (std::size_t j = 0; j <= l; ++j) q[j] = p[j] - kk * v[j];
    // A <- A - q v^T - v q^T on the leading block.
    for (std::size_t j = 0; j <= l; ++j) {
      const double qj = q[j], vj = v[j];
      double* aj = a.data() + j * n;
      for (std::size_t k = 0; k <= l; ++k) aj[k] -= qj * v[k] + vj * q[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i];
}

/// Implicit-shift QL iteration on a tridiagonal matrix, eigenvalues only.
inline void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::size_t n) {
  if (n == 0) return;
  // Shift subdiagonal so that e[i] couples i and i+1 with e[n-1] unused.
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd + 1e-300) break;
      }
      if (m != l) {
        if (iter++ == 64) throw Error("ql_implicit: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, pp = 0.0;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
          if (i == l) {
            d[l] -= pp;
            e[l] = g;
            e[m] = 0.0;
            pp = 0.0;
          }
        }
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Householder + QL path for larger blocks.
inline std::vector<double> householder_ql_eigenvalues(std::vector<double> a, std::size_t n) {
  std::vector<double> d, e;
  detail::tridiagonalize(a, n, d, e);
  detail::ql_implicit(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

/// Connected components of the off-diagonal sparsity graph (entries that are
/// exactly zero split the matrix into independent diagonal blocks).
inline std::vector<std::vector<std::size_t>> components(const std::vector<double>& a,
                                                        std::size_t n) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    stack.push_back(seed);
    comp[seed] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out[id].push_back(i);
      const double* ai = a.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        if (ai[j] != 0.0 && comp[j] < 0) {
          comp[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

/// Eigenvalues of a dense symmetric matrix: split into independent blocks,
/// Jacobi on small blocks, Householder+QL on large ones, merged sorted.
inline std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, std::size_t n,
                                                 const Options& opts = {}) {
  const auto comps = components(a, n);
  std::vector<double> eig;
  eig.reserve(n);
  for (const auto& idx : comps) {
    const std::size_t m = idx.size();
    std::vector<double> block(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) block[r * m + c] = a[idx[r] * n + idx[c]];
    std::vector<double> be = (m <= opts.jacobi_limit)
                                 ? jacobi_eigenvalues(std::move(block), m, opts)
                                 : householder_ql_eigenvalues(std::move(block), m);
    eig.insert(eig.end(), be.begin(), be.end());
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace sym_eigen
}  // namespace vacindex
