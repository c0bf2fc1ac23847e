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

// Evaluation of PA formulas over the naturals under several satisfaction
// notions: exact evaluation of quantifier-free formulas, Tarskian evaluation
// over a finite domain {0..bound}, bounded algorithmic verdicts that never
// turn a finite search into an unbounded claim, and provability-backed
// satisfaction relative to a corpus of checked proofs.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "pwb/natural.hpp"
#include "pwb/proof.hpp"
#include "pwb/syntax.hpp"

namespace pwb {

using Assignment = std::map<VarIndex, Natural>;

constexpr std::uint64_t kDefaultBudget = 1000;

struct Verdict {
  enum class Kind : std::uint8_t { True, False, FalseAt, WitnessAt, VerifiedUpTo, NoWitnessUpTo };

  Kind kind = Kind::False;
  // FalseAt / WitnessAt: position in the scan. For a single quantified
  // variable this is its value; for a block of variables it is the Cantor
  // code of the tuple, which is spelled out in witness_vars/witness_tuple.
  std::uint64_t witness = 0;
  std::vector<VarIndex> witness_vars;
  std::vector<std::uint64_t> witness_tuple;
  // VerifiedUpTo / NoWitnessUpTo: the budget that was searched.
  std::uint64_t bound = 0;

  // True and WitnessAt establish truth; False and FalseAt establish falsity.
  bool definite() const noexcept;
  bool holds() const noexcept;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* verdict_kind_name(Verdict::Kind kind) noexcept;

// Throws Error(UnboundVariable).
Natural eval_term(const Term& t, const Assignment& a);

// Throws Error(HasQuantifier) or Error(UnboundVariable).
bool eval_qf(const Formula& f, const Assignment& a);

// Classical evaluation with every quantifier ranging over {0..bound}. This
// is a finite approximation of the standard interpretation.
bool eval_tarski_bounded(const Formula& f, std::uint64_t bound, const Assignment& a);

struct Prenex {
  enum class Quantifier : std::uint8_t { ForAll, Exists };
  std::vector<std::pair<Quantifier, VarIndex>> prefix;
  Formula matrix;  // quantifier-free
};

// Prenex normal form. A bound variable keeps its index unless that index is
// free in f or already bound elsewhere, in which case it is renamed to a
// fresh index above max_var(f). ~forall x ~B is read as exists x B.
Prenex to_prenex(const Formula& f);
Formula prenex_formula(const Prenex& p);

// forall over the free variables of f, in increasing index order.
Formula universal_closure(const Formula& f);

// Bounded algorithmic verdict; see Verdict. Only the innermost block of
// like quantifiers is searched: a formula with alternating quantifiers can
// never reach a definite verdict, so its outermost block reports the budget.
// Throws Error(UnboundVariable).
Verdict eval_algorithmic(const Formula& f, std::uint64_t budget, const Assignment& a);

// The set of formulas occurring as lines of accepted hypothesis-free
// derivations.
class TheoremCorpus {
 public:
  TheoremCorpus() = default;
  // Throws Error(UncheckedCorpus) if some derivation is rejected or has
  // hypotheses.
  explicit TheoremCorpus(std::span<const Derivation> proofs);

  void add(const Derivation& proof);
  bool proves(const Formula& f) const;
  std::size_t size() const noexcept { return theorems_.size(); }

 private:
  std::unordered_set<Formula, FormulaHash> theorems_;
};

// As eval_algorithmic, but a closed quantifier-free instance is satisfied
// iff it is (syntactically) a theorem of the corpus. Throws
// Error(UnboundVariable) when f is not closed.
Verdict eval_godelian(const Formula& f, const TheoremCorpus& corpus, std::uint64_t budget);

// Inverse of the Cantor tuple coding used for quantifier blocks.
std::vector<std::uint64_t> cantor_untuple(std::uint64_t code, std::size_t arity);
std::uint64_t cantor_tuple(std::span<const std::uint64_t> values);

}  // namespace pwb
