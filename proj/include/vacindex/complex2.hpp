// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "vacindex/scalar.hpp"

namespace vacindex {

/// Complex number over either scalar backend. std::complex is only
/// specified for floating-point types, so rationals get this little struct.
template <class S>
struct Complex {
  S re{};
  S im{};

  Complex() = default;
  Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const S& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  Complex conj() const { return {re, -im}; }
  S abs_sq() const { return re * re + im * im; }
  bool is_zero() const { return re == S(0) && im == S(0); }

  /// Division by a nonzero complex.
  friend Complex operator/(const Complex& a, const Complex& b) {
    S d = b.abs_sq();
    Complex n = a * b.conj();
    return {n.re / d, n.im / d};
  }
};

template <class S>
std::complex<double> to_cd(const Complex<S>& z) {
  return {to_double(z.re), to_double(z.im)};
}

}  // namespace vacindex
