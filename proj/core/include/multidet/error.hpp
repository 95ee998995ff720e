// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace multidet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad mode count, mismatched
/// dimensions, equal spin labels where distinct ones are required, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Probability query on a two-particle state whose norm vanishes.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// Least-squares design matrix has (numerically) collinear columns.
class CollinearDesign : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or configuration.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace multidet
