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

// Goedel numbering of symbol strings, formulas and proof sequences, the
// proof-pair relation, and the beta-function sequence encoding.
//
// A symbol string s1..sn is coded as p1^s1 * ... * pn^sn over the first n
// primes, with symbol codes
//
//   0 -> 1   ' -> 3   ~ -> 5   -> -> 7   forall -> 9   ( -> 11   ) -> 13
//   = -> 15  + -> 17  * -> 19  xk -> 21 + 2k
//
// and a sequence of formulas as the product of p_i raised to the formula
// codes. Quantifiers are spelled "forall xk F" with no dot.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwb/natural.hpp"
#include "pwb/proof.hpp"
#include "pwb/syntax.hpp"

namespace pwb {

// The i-th prime, 0-based (prime(0) == 2).
std::uint64_t prime(std::size_t i);

// A code held as its exponent vector over consecutive primes. Every exponent
// is at least 1, so the exponent vector determines a symbol string.
//
// Proof codes have formula codes as exponents; their decimal value would not
// fit in memory, so the value is only materialised on request and under a
// size cap.
class GodelCode {
 public:
  static constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 16;

  // Throws Error(NotACode) if `exponents` is empty or holds a zero.
  explicit GodelCode(std::vector<Natural> exponents);

  // Factors `n` over 2, 3, 5, ...; throws Error(NotACode) when n < 2 or a
  // prime is skipped.
  static GodelCode from_natural(const Natural& n);

  // Decimal digits, or the factored form "2^e1*3^e2*..." produced by
  // to_string. Throws Error(NotACode) or Error(InvalidArgument).
  static GodelCode parse(std::string_view text);

  const std::vector<Natural>& exponents() const noexcept { return exponents_; }

  // log2 of the value, in floating point; +inf when an exponent is itself
  // astronomically large.
  double log2_value() const;

  // The value when it needs at most `max_bits` bits.
  std::optional<Natural> value(std::size_t max_bits = kDefaultMaxBits) const;

  // Decimal when the value fits `max_bits`, factored form otherwise.
  std::string to_string(std::size_t max_bits = kDefaultMaxBits) const;
  std::string to_factored_string() const;

  friend bool operator==(const GodelCode&, const GodelCode&) = default;

 private:
  std::vector<Natural> exponents_;
};

std::vector<std::uint64_t> symbol_string(const Term& t);
std::vector<std::uint64_t> symbol_string(const Formula& f);

GodelCode encode_term(const Term& t);
GodelCode encode_formula(const Formula& f);

// Throws Error(NotACode) for unknown symbol codes or ill-formed strings.
Term decode_term(const GodelCode& code);
Formula decode_formula(const GodelCode& code);

// Codes the formula sequence only; justifications are not part of the code.
// Throws Error(HasHypotheses).
GodelCode encode_proof(const Derivation& d);
GodelCode encode_sequence_of(std::span<const Formula> formulas);
std::vector<Formula> decode_proof(const GodelCode& code);

// Rebuilds justifications for a bare formula sequence: axiom recognition,
// then Modus Ponens over earlier lines, then Generalisation over an earlier
// line. Returns nullopt when some line has no justification.
std::optional<Derivation> reconstruct_proof(std::span<const Formula> formulas);

// True iff `x` codes a formula sequence that is a proof (as reconstructed
// above and accepted by check) whose last formula has code `y`.
bool proof_pair(const GodelCode& x, const GodelCode& y);
// Malformed codes give false.
bool proof_pair(const Natural& x, const Natural& y);

// --- beta function ------------------------------------------------------------

struct BetaPair {
  Natural b;
  Natural c;
};

// b mod (1 + (i+1)*c).
Natural beta_eval(const Natural& b, const Natural& c, const Natural& i);

// c = j! with j = max(length - 1, max value); b by Chinese remaindering, the
// least b with beta_eval(b, c, i) == seq[i] for every i.
// Throws Error(InvalidArgument) on an empty sequence.
BetaPair encode_sequence(std::span<const Natural> seq);

// The moduli 1 + (i+1)*c for i < length.
std::vector<Natural> beta_moduli(const Natural& c, std::size_t length);
bool pairwise_coprime(std::span<const Natural> moduli);

// a < b, spelled exists z. ((a + z') = b); z must not occur in a or b.
Formula less_than(const Term& a, const Term& b, VarIndex z);
// a <= b, spelled exists z. ((a + z) = b).
Formula less_equal(const Term& a, const Term& b, VarIndex z);

// Bt(x1, x2, x3, x4), which holds iff beta_eval(x1, x2, x3) == x4:
//   exists w. (x1 = ((1 + (x3 + 1) * x2) * w + x4)) /\ (x4 < 1 + (x3 + 1) * x2)
// with /\ and < expanded. Bound variables are chosen above every variable of
// the arguments.
Formula beta_formula(const Term& x1, const Term& x2, const Term& x3, const Term& x4);

}  // namespace pwb
