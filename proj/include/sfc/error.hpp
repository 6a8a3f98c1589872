// Copyright 2026 The sfcanon Authors
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
#include <string_view>

namespace sfc {

enum class ErrorKind {
  DivisionByZero,
  TowerDepthExceeded,
  ZeroHomogeneousBlock,
  ZeroScale,
  ZeroMatrix,
  SingularMatrix,
  InvalidParameter,
  AntisymmetricPartZero,
  DegreeTooLow,
  DegreeTooHigh,
  NotOrientable,
  DegreeBoundExceeded,
  NotMultiplicativelyAntisymmetric,
  DimensionTooLarge,
  Syntax,
  UnknownVariable,
  NotEmbeddable,
  Internal,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::TowerDepthExceeded: return "tower-depth-exceeded";
    case ErrorKind::ZeroHomogeneousBlock: return "zero-homogeneous-block";
    case ErrorKind::ZeroScale: return "zero-scale";
    case ErrorKind::ZeroMatrix: return "zero-matrix";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::AntisymmetricPartZero: return "antisymmetric-part-zero";
    case ErrorKind::DegreeTooLow: return "degree-too-low";
    case ErrorKind::DegreeTooHigh: return "degree-too-high";
    case ErrorKind::NotOrientable: return "not-orientable";
    case ErrorKind::DegreeBoundExceeded: return "degree-bound-exceeded";
    case ErrorKind::NotMultiplicativelyAntisymmetric: return "not-multiplicatively-antisymmetric";
    case ErrorKind::DimensionTooLarge: return "n-too-large";
    case ErrorKind::Syntax: return "syntax-error";
    case ErrorKind::UnknownVariable: return "unknown-variable";
    case ErrorKind::NotEmbeddable: return "not-embeddable";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally record the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& what, std::size_t position)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sfc
