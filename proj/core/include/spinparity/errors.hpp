// Copyright 2026 The spinparity developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinparity {

/** Base class for all exceptions thrown by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Invalid user input: malformed configuration, bad option values. */
class ConfigError : public Error {
 public:
  using Error::Error;
};

/** A configuration file could not be parsed. Carries the 1-based line number. */
class ParseError : public ConfigError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : ConfigError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/** A configuration key is not recognized. */
class UnknownKey : public ConfigError {
 public:
  explicit UnknownKey(const std::string& key)
      : ConfigError("unknown key: " + key) {}
};

/** A sweep range is empty, reversed, or has an unusable point count. */
class InvalidRange : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/** A numerical routine received input outside its domain or failed. */
class NumericalError : public Error {
 public:
  using Error::Error;
};

/** The supplied matrix is not a density matrix. */
class NotAState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/** The supplied state is not pure enough for a pure-state formula. */
class NotPure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/** The operation requires the shifted, traceless Hamiltonian. */
class NotTraceless : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/**
 * The two stationary energy branches coincide, so the density-matrix
 * normalization breaks down.
 */
class DegenerateEnergy : public Error {
 public:
  using Error::Error;
};

/**
 * The squared shifted Hamiltonian does not split into a scalar part plus a
 * correction operator squaring to a scalar, so no stationary state of the
 * supported form exists for this field configuration.
 */
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/** Closed-form case formulas were requested outside their validity domain. */
class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace spinparity
