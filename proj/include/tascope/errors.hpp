// Copyright 2026 The tascope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace tascope {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A dataset specification (e.g. toy size N) that cannot be realized.
class InvalidSpecError : public Error {
  public:
    using Error::Error;
};

/// Inconsistent or out-of-contract configuration: mismatched dimensions,
/// bad grids, unbalanced pools, invalid step sizes.
class ConfigurationError : public Error {
  public:
    using Error::Error;
};

/// Non-finite inputs or values outside a function's mathematical domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Problems with user-supplied data.
class DataError : public Error {
  public:
    using Error::Error;
};

class ParseError : public DataError {
  public:
    ParseError(std::size_t line, const std::string &what)
        : DataError("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Data without the variation an operation needs (zero covariance,
/// constant projections, all-zero kernels).
class DegenerateDataError : public DataError {
  public:
    using DataError::DataError;
};

/// Raised when a curvature probe finds no local maximum.
class NotAMaximumError : public Error {
  public:
    using Error::Error;
};

} // namespace tascope
