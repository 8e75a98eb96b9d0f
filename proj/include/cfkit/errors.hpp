// Copyright 2026 The cfkit Authors
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

#ifndef CFKIT_ERRORS_HPP_
#define CFKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfkit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: unknown names, malformed text, malformed files.
// The command line maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Arithmetic failures on well-formed input (poles, zero scalings, ...).
// The command line maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Index-carrying numeric errors.
class IndexedError : public NumericError {
 public:
  IndexedError(const std::string& what, long index)
      : NumericError(what + " at n=" + std::to_string(index)), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

// Tail denominator of a coefficient sequence vanishes at the given index.
class TailPoleError : public IndexedError {
 public:
  explicit TailPoleError(long n)
      : IndexedError("sequence tail has a pole", n) {}
};

// A head-only sequence was evaluated past its last explicit term.
class UndefinedTermError : public IndexedError {
 public:
  explicit UndefinedTermError(long n)
      : IndexedError("sequence has no term", n) {}
};

// B_n = 0, so the n-th convergent does not exist.
class UndefinedConvergentError : public IndexedError {
 public:
  explicit UndefinedConvergentError(long n)
      : IndexedError("convergent denominator vanishes", n) {}
};

class DCoefficientPoleError : public IndexedError {
 public:
  explicit DCoefficientPoleError(long n)
      : IndexedError("hypergeometric coefficient d_n has a pole", n) {}
};

class ZeroScalingError : public IndexedError {
 public:
  explicit ZeroScalingError(long n)
      : IndexedError("scaling sequence vanishes", n) {}
};

class SymbolicLimitUnavailableError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The reference bracket is too wide to certify the requested error bound.
class BracketTooWideError : public NumericError {
 public:
  using NumericError::NumericError;
};

class UnknownPresetError : public InputError {
 public:
  explicit UnknownPresetError(const std::string& name)
      : InputError("unknown preset '" + name + "'") {}
};

// Malformed continued-fraction spec file.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

// Base of all expression parsing failures; carries a byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class PiNotAllowedError : public ParseError {
 public:
  explicit PiNotAllowedError(std::size_t position)
      : ParseError("'pi' is not allowed in a sequence expression", position) {}
};

class VariableNotAllowedError : public ParseError {
 public:
  explicit VariableNotAllowedError(std::size_t position)
      : ParseError("'n' is not allowed in a constant expression", position) {}
};

class NonAffinePiError : public ParseError {
 public:
  explicit NonAffinePiError(std::size_t position)
      : ParseError("expression is not affine in pi", position) {}
};

class ZeroDenominatorError : public ParseError {
 public:
  explicit ZeroDenominatorError(std::size_t position)
      : ParseError("denominator is identically zero", position) {}
};

}  // namespace cfkit

#endif  // CFKIT_ERRORS_HPP_
