// Copyright 2026 The symspace Authors
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

#include <stdexcept>
#include <string>

namespace symspace {

// Base class for every error raised by the library. The CLI maps
// ConfigError to exit code 2 and everything else to a failed report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation outside its mathematical domain (inverse of zero, singular
// Gram matrix, non-nilpotent input where nilpotency is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Characteristic not supported by the requested computation (p = 2 for
// quadratic characters and orthogonal geometry).
class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its documented work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Seeded sampling could not produce a generic sample within the resample budget.
class DegenerateSampling : public Error {
 public:
  using Error::Error;
};

// A truncated power series was needed to higher order than it carries.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// Invalid user configuration (bad flags, out-of-range parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace symspace
