// Copyright 2026 The graphrtc Authors
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

#ifndef GRAPHRTC_ERROR_HPP_
#define GRAPHRTC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace grtc {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text, tuples, or standard-input data.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid query, unsupported graph mode, or out-of-range node.
class OracleError : public Error {
 public:
  using Error::Error;
};

// An exact solver exceeded its size bound or expansion budget.
class BudgetError : public OracleError {
 public:
  using OracleError::OracleError;
};

// Diameter requested on a disconnected graph: the value would be infinite.
class InfiniteDiameterError : public OracleError {
 public:
  using OracleError::OracleError;
};

// Bad configuration file or CLI arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed dataset record; message carries the offending line number.
class DatasetError : public Error {
 public:
  using Error::Error;
};

}  // namespace grtc

#endif  // GRAPHRTC_ERROR_HPP_
