// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vacindex {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The two periods are real-linearly dependent (zero fundamental area).
class DegenerateLattice : public Error {
 public:
  explicit DegenerateLattice(const std::string& what) : Error(what) {}
};

/// A quadratic form with non-positive discriminant was passed where a
/// positive-definite one is required.
class NonPositiveDefinite : public Error {
 public:
  explicit NonPositiveDefinite(const std::string& what) : Error(what) {}
};

/// The Fourier-block box excludes modes that may carry non-positive
/// eigenvalues.
class BoxTooSmall : public Error {
 public:
  explicit BoxTooSmall(const std::string& what) : Error(what) {}
};

/// The finite-difference grid cannot separate the zero band from the
/// nearest nonzero eigenvalues.
class GridTooCoarse : public Error {
 public:
  explicit GridTooCoarse(const std::string& what) : Error(what) {}
};

/// A mode that is not a Jacobi field was passed to the null-mode residual.
class NotANullMode : public Error {
 public:
  explicit NotANullMode(const std::string& what) : Error(what) {}
};

/// Malformed user input (CLI values, rational syntax, flags).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace vacindex
