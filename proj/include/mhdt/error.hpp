// Copyright 2026 The mhdt Authors.
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

namespace mhdt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input. The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateRow : public InputError {
 public:
  using InputError::InputError;
};

class WidthMismatch : public InputError {
 public:
  using InputError::InputError;
};

class IndexError : public InputError {
 public:
  using InputError::InputError;
};

class DomainMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size limit was exceeded. The CLI maps this family to exit
/// code 3.
class LimitError : public Error {
 public:
  using Error::Error;
};

class ExactLimitExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

class DomainTooLarge : public LimitError {
 public:
  using LimitError::LimitError;
};

/// A bounded search ran past its budget.
class Overbudget : public Error {
 public:
  using Error::Error;
};

class SpecSetTooLarge : public Error {
 public:
  using Error::Error;
};

class InconsistentOracle : public Error {
 public:
  using Error::Error;
};

class DegenerateSplit : public Error {
 public:
  using Error::Error;
};

class MultipleMaximal : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that the underlying theory guarantees did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mhdt
