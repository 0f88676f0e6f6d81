// Copyright 2026 The ditlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ditlib {

/// Base class for all ditlib errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Partition construction and algebra.
class OverlapError : public Error {
 public:
  using Error::Error;
};
class CoverageError : public Error {
 public:
  using Error::Error;
};
class EmptyBlockError : public Error {
 public:
  using Error::Error;
};
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// Formula parsing and validity checking.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};
class UnboundVariable : public Error {
 public:
  using Error::Error;
};
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Distribution-level measures.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};
class AsymmetricDistance : public Error {
 public:
  using Error::Error;
};
class NonzeroDiagonal : public Error {
 public:
  using Error::Error;
};

// Joint distributions and infosets.
class EmptyAxisSet : public Error {
 public:
  using Error::Error;
};
class AxisMismatch : public Error {
 public:
  using Error::Error;
};
class OverlappingAxisSets : public Error {
 public:
  using Error::Error;
};

// Average forms and the dit-bit transform.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};
class AlreadyBitKind : public Error {
 public:
  using Error::Error;
};

// Numeric bridges.
class ZeroProbability : public Error {
 public:
  using Error::Error;
};
class NotPowerOfTwo : public Error {
 public:
  using Error::Error;
};

// Input loading.
class IoError : public Error {
 public:
  using Error::Error;
};
class SchemaError : public Error {
 public:
  using Error::Error;
};
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ditlib
