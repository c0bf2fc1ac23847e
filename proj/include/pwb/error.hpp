// Copyright 2026 The pwb Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwb {

// Every failure raised by the core carries one of these codes. The C API
// maps them one-to-one onto pwb_status values.
enum class ErrorCode {
  InvalidArgument,
  UnexpectedToken,
  UnbalancedParen,
  BadVariable,
  CaptureError,
  ProofSyntax,
  NotAccepted,
  OpenHypothesis,
  UncheckedInput,
  UncheckedCorpus,
  NotACode,
  HasHypotheses,
  UnboundVariable,
  HasQuantifier,
  BadBase,
  BadBound,
  ZeroTerm,
  TooLarge,
  InvalidMachine,
  HistoryMismatch,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the formula and term parsers; `position` is a byte offset into
// the input text (or a symbol index when decoding a Goedel code).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pwb
