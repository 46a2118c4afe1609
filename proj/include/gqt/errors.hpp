// Copyright 2026 The gqt Authors
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

namespace gqt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit index, basis index or descriptor outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes disagree (state vs. circuit, state vs. matrix).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (dense cap, subset-enumeration cap) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A matrix or gate that must be unitary is not.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad spec contents, bad JSON, bad flag values.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operation requested for a regime that has no construction for it.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

}  // namespace gqt
