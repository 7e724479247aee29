// Copyright 2026 The sbmal Authors.
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

namespace sbmal {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid user-supplied parameters (probabilities, counts, budgets).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Mismatched vector/matrix dimensions between arguments.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data files.
class DataError : public Error {
 public:
  using Error::Error;
};

// An exhaustive-enumeration routine was asked to do more work than its cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// An operation was called in a state in which it is not defined.
class StateError : public Error {
 public:
  using Error::Error;
};

// Parameter estimation had no usable labeled pairs and no fallback.
class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbmal
