// Copyright 2026 The qcc Authors
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

#include <stdexcept>
#include <string>

namespace qcc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented invariant (trace, positivity, weights...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A matrix that should be a Choi matrix has a negative eigenvalue.
class NotCompletelyPositiveError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Two channels were expected to agree (or be conjugates of one channel) and
/// do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written, or its contents are not valid JSON.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcc
