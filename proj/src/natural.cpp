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

#include "pwb/natural.hpp"

#include "pwb/error.hpp"

namespace pwb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnexpectedToken: return "UnexpectedToken";
    case ErrorCode::UnbalancedParen: return "UnbalancedParen";
    case ErrorCode::BadVariable: return "BadVariable";
    case ErrorCode::CaptureError: return "CaptureError";
    case ErrorCode::ProofSyntax: return "ProofSyntax";
    case ErrorCode::NotAccepted: return "NotAccepted";
    case ErrorCode::OpenHypothesis: return "OpenHypothesis";
    case ErrorCode::UncheckedInput: return "UncheckedInput";
    case ErrorCode::UncheckedCorpus: return "UncheckedCorpus";
    case ErrorCode::NotACode: return "NotACode";
    case ErrorCode::HasHypotheses: return "HasHypotheses";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::HasQuantifier: return "HasQuantifier";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::ZeroTerm: return "ZeroTerm";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidMachine: return "InvalidMachine";
    case ErrorCode::HistoryMismatch: return "HistoryMismatch";
  }
  return "Unknown";
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "expected a natural number, got empty text");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::InvalidArgument,
                  "expected a natural number, got '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

bool fits_u64(const Natural& value) noexcept {
  return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& value) {
  if (!fits_u64(value)) {
    throw Error(ErrorCode::TooLarge, "value does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

Natural from_u64(std::uint64_t value) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

}  // namespace pwb
