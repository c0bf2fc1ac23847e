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

// Hilbert-style derivations for first-order PA: logical axioms A1-A5, the
// arithmetic axioms PA1-PA9, Modus Ponens and Generalisation, plus
// hypotheses. The checker verifies explicit instantiation records; it never
// searches for them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pwb/syntax.hpp"

namespace pwb {

enum class Axiom : std::uint8_t {
  A1, A2, A3, A4, A5,
  PA1, PA2, PA3, PA4, PA5, PA6, PA7, PA8, PA9,
};

const char* axiom_name(Axiom axiom) noexcept;
std::optional<Axiom> axiom_from_name(std::string_view name) noexcept;

// Metavariable bindings for a schema. Each schema reads only its own fields:
//   A1  B C          B -> (C -> B)
//   A2  B C D        (B -> (C -> D)) -> ((B -> C) -> (B -> D))
//   A3  B C          (~C -> ~B) -> ((~C -> B) -> C)
//   A4  x B t        (forall x B) -> B[t/x], t free for x in B
//   A5  x B C        (forall x (B -> C)) -> (B -> forall x C), x not free in B
//   PA9 x F          F(0) -> ((forall x (F(x) -> F(x'))) -> forall x F(x))
// PA1-PA8 take no bindings.
struct Instantiation {
  std::optional<Formula> b{}, c{}, d{}, f{};
  std::optional<VarIndex> x{};
  std::optional<Term> t{};

  friend bool operator==(const Instantiation&, const Instantiation&) = default;
};

// The formula an axiom schema denotes under `inst`. Throws
// Error(InvalidArgument) when a binding is missing or a side condition fails.
Formula instantiate(Axiom axiom, const Instantiation& inst);

// The fixed formulas PA1-PA8.
Formula arithmetic_axiom(Axiom axiom);

struct AxiomStep {
  Axiom axiom;
  Instantiation inst;
  friend bool operator==(const AxiomStep&, const AxiomStep&) = default;
};
struct HypothesisStep {
  std::size_t index;  // into Derivation::hypotheses
  friend bool operator==(const HypothesisStep&, const HypothesisStep&) = default;
};
// Line `minor` holds A and line `major` holds A -> B.
struct ModusPonens {
  std::size_t minor;
  std::size_t major;
  friend bool operator==(const ModusPonens&, const ModusPonens&) = default;
};
struct Generalisation {
  std::size_t line;
  VarIndex var;
  friend bool operator==(const Generalisation&, const Generalisation&) = default;
};

// Line references are 0-based indices of strictly earlier lines.
using Justification = std::variant<AxiomStep, HypothesisStep, ModusPonens, Generalisation>;

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Derivation {
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;
};

enum class RejectReason : std::uint8_t {
  None,
  Empty,
  NotAnAxiomInstance,
  BadHypothesis,
  BadMP,
  BadGen,
  ForwardReference,
  GenOnHypothesisVariable,
};

const char* reject_reason_name(RejectReason reason) noexcept;

struct CheckReport {
  bool accepted = false;
  std::size_t line = 0;  // 1-based line of the first failure; 0 when accepted
  RejectReason reason = RejectReason::None;
  std::string detail;
  // Accepted with an empty hypothesis list.
  bool is_proof = false;
};

CheckReport check(const Derivation& d);

// Identifies a formula as an axiom instance and reconstructs its record, so
// that instantiate(result) == f. Used when justifications are not supplied.
std::optional<AxiomStep> recognize_axiom(const Formula& f);

// Discharges the last hypothesis A (which must be closed) from an accepted
// derivation of B, returning an accepted derivation of A -> B.
// Errors: NotAccepted, OpenHypothesis, InvalidArgument (no hypotheses).
Derivation deduction_transform(const Derivation& d);

// A theorem ~forall x F together with proofs of F(0), ..., F(bound).
struct OmegaHit {
  Formula negated_universal;
  VarIndex var;
  Formula body;
};

// Every entry must be an accepted, hypothesis-free derivation
// (Error(UncheckedInput) otherwise). Every line of every entry counts as a
// proved theorem.
std::vector<OmegaHit> omega_evidence_scan(std::span<const Derivation> theorems,
                                          std::uint64_t bound);

// --- text format ------------------------------------------------------------
//
//   hyp: <formula>
//   <n>. <formula> ; <justification>
//
// with justification one of A1(B=..., C=...), A4(x=xk, B=..., t=...), PA5,
// PA9(x=xk, F=...), HYP <k>, MP <i> <j>, GEN <i> xk. Lines and hypotheses
// are numbered from 1 in the text. '#' starts a comment.

// Throws Error(ProofSyntax) naming the offending text line.
Derivation parse_derivation(std::string_view text);
std::string format_derivation(const Derivation& d);
std::string format_justification(const Justification& j);

}  // namespace pwb
