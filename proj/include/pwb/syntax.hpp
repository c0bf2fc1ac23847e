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

// Abstract syntax of first-order Peano Arithmetic: terms over {0, ', +, *}
// and formulas over {=, ~, ->, forall}. Existential quantification and the
// connectives /\, \/, <-> are abbreviations that expand into the primitive set.
//
// Terms and formulas are immutable trees with shared structure; copying one is
// a reference-count bump.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pwb {

// Variables are the indexed family x1, x2, ...; index 0 is never valid.
using VarIndex = std::uint32_t;

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Var, Succ, Add, Mul };

  Term();  // the constant 0

  static Term zero();
  static Term var(VarIndex index);
  static Term succ(Term inner);
  static Term add(Term left, Term right);
  static Term mul(Term left, Term right);
  // 0 followed by `value` successor marks.
  static Term numeral(std::uint64_t value);

  Kind kind() const noexcept;
  VarIndex index() const;     // Var
  const Term& inner() const;  // Succ
  const Term& left() const;   // Add, Mul
  const Term& right() const;  // Add, Mul

  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Not, Implies, ForAll };

  Formula();  // (0 = 0)

  static Formula eq(Term left, Term right);
  static Formula negation(Formula inner);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula forall(VarIndex var, Formula body);

  // Abbreviations, expanded on construction.
  static Formula exists(VarIndex var, Formula body);  // ~forall x. ~body
  static Formula conj(Formula a, Formula b);          // ~(a -> ~b)
  static Formula disj(Formula a, Formula b);          // ~a -> b
  static Formula iff(Formula a, Formula b);           // (a -> b) /\ (b -> a)

  Kind kind() const noexcept;
  const Term& lhs() const;            // Eq
  const Term& rhs() const;            // Eq
  const Formula& inner() const;       // Not
  const Formula& antecedent() const;  // Implies
  const Formula& consequent() const;  // Implies
  VarIndex bound_var() const;         // ForAll
  const Formula& body() const;        // ForAll

  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// --- printing and parsing -------------------------------------------------

// Canonical text: fully parenthesised infix, postfix ' for successor.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Debug rendering of the tree, e.g. Eq(Add(Var 1, Zero), Var 1).
std::string to_ast_string(const Term& t);
std::string to_ast_string(const Formula& f);

// Throws ParseError (UnexpectedToken, UnbalancedParen, BadVariable).
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

// --- variables and substitution ---------------------------------------------

std::set<VarIndex> free_vars(const Term& t);
std::set<VarIndex> free_vars(const Formula& f);
bool occurs_free(VarIndex var, const Formula& f);
bool occurs(VarIndex var, const Term& t);
bool is_closed(const Formula& f);
bool is_quantifier_free(const Formula& f);
// Largest variable index occurring anywhere (free or bound), 0 if none.
VarIndex max_var(const Formula& f);
VarIndex max_var(const Term& t);

// A numeral is 0 under successor marks only. numeral_value requires one.
bool is_numeral(const Term& t);
std::uint64_t numeral_value(const Term& t);

Term substitute(const Term& t, VarIndex var, const Term& replacement);

// True when no free variable of `t` would be captured by a quantifier of
// `f` when `t` replaces the free occurrences of `var`.
bool is_free_for(const Term& t, VarIndex var, const Formula& f);

// Replaces every free occurrence of `var`. Throws Error(CaptureError) when
// `t` is not free for `var` in `f`.
Formula substitute(const Formula& f, VarIndex var, const Term& t);

// --- tokens (shared with the Goedel-code decoder) ---------------------------

enum class TokenKind : std::uint8_t {
  Zero,
  Prime,
  Tilde,
  Arrow,
  ForAll,
  Exists,
  Dot,
  LParen,
  RParen,
  Equals,
  Plus,
  Star,
  Var,
  And,
  Or,
  Iff,
  End,
};

struct Token {
  TokenKind kind;
  VarIndex var = 0;
  std::size_t position = 0;
};

std::vector<Token> tokenize(std::string_view text);

// Parses a whole token sequence (terminated by an End token) as a formula.
// When `require_dot` is false the '.' after a quantified variable is absent,
// which is how Goedel symbol strings spell quantifiers.
Formula parse_formula_tokens(const std::vector<Token>& tokens, bool require_dot);
Term parse_term_tokens(const std::vector<Token>& tokens);

}  // namespace pwb
