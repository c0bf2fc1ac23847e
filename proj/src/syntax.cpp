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

#include "pwb/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pwb/error.hpp"

namespace pwb {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// --- Term -------------------------------------------------------------------

struct Term::Node {
  Kind kind;
  VarIndex index;
  Term a;  // unused children hold an empty handle
  Term b;
  std::size_t hash;
};

Term::Term() : Term(zero()) {}

Term Term::zero() {
  static const Term instance(std::make_shared<const Node>(
      Node{Kind::Zero, 0, Term(nullptr), Term(nullptr), mix(0x51, 0)}));
  return instance;
}

Term Term::var(VarIndex index) {
  if (index == 0) throw Error(ErrorCode::BadVariable, "variable index must be at least 1");
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, index, Term(nullptr), Term(nullptr), mix(0x52, index)}));
}

Term Term::succ(Term inner) {
  std::size_t h = mix(0x53, inner.hash());
  return Term(std::make_shared<const Node>(Node{Kind::Succ, 0, std::move(inner), Term(nullptr), h}));
}

Term Term::add(Term left, Term right) {
  std::size_t h = mix(mix(0x54, left.hash()), right.hash());
  return Term(std::make_shared<const Node>(Node{Kind::Add, 0, std::move(left), std::move(right), h}));
}

Term Term::mul(Term left, Term right) {
  std::size_t h = mix(mix(0x55, left.hash()), right.hash());
  return Term(std::make_shared<const Node>(Node{Kind::Mul, 0, std::move(left), std::move(right), h}));
}

Term Term::numeral(std::uint64_t value) {
  Term t = zero();
  for (std::uint64_t i = 0; i < value; ++i) t = succ(std::move(t));
  return t;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

VarIndex Term::index() const {
  if (kind() != Kind::Var) throw Error(ErrorCode::InvalidArgument, "term is not a variable");
  return node_->index;
}

const Term& Term::inner() const {
  if (kind() != Kind::Succ) throw Error(ErrorCode::InvalidArgument, "term is not a successor");
  return node_->a;
}

const Term& Term::left() const {
  if (kind() != Kind::Add && kind() != Kind::Mul)
    throw Error(ErrorCode::InvalidArgument, "term is not binary");
  return node_->a;
}

const Term& Term::right() const {
  if (kind() != Kind::Add && kind() != Kind::Mul)
    throw Error(ErrorCode::InvalidArgument, "term is not binary");
  return node_->b;
}

std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a.node_->index == b.node_->index;
    case Term::Kind::Succ: return a.node_->a == b.node_->a;
    case Term::Kind::Add:
    case Term::Kind::Mul: return a.node_->a == b.node_->a && a.node_->b == b.node_->b;
  }
  return false;
}

// --- Formula ----------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  VarIndex var;
  Term lhs;
  Term rhs;
  Formula a;  // unused children hold an empty handle
  Formula b;
  std::size_t hash;
};

Formula::Formula() : Formula(eq(Term::zero(), Term::zero())) {}

Formula Formula::eq(Term left, Term right) {
  std::size_t h = mix(mix(0x61, left.hash()), right.hash());
  return Formula(std::make_shared<const Node>(
      Node{Kind::Eq, 0, std::move(left), std::move(right), Formula(nullptr), Formula(nullptr), h}));
}

Formula Formula::negation(Formula inner) {
  std::size_t h = mix(0x62, inner.hash());
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, 0, Term::zero(), Term::zero(), std::move(inner), Formula(nullptr), h}));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  std::size_t h = mix(mix(0x63, antecedent.hash()), consequent.hash());
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, 0, Term::zero(), Term::zero(),
                                                   std::move(antecedent), std::move(consequent), h}));
}

Formula Formula::forall(VarIndex var, Formula body) {
  if (var == 0) throw Error(ErrorCode::BadVariable, "variable index must be at least 1");
  std::size_t h = mix(mix(0x64, var), body.hash());
  return Formula(std::make_shared<const Node>(
      Node{Kind::ForAll, var, Term::zero(), Term::zero(), std::move(body), Formula(nullptr), h}));
}

Formula Formula::exists(VarIndex var, Formula body) {
  return negation(forall(var, negation(std::move(body))));
}

Formula Formula::conj(Formula a, Formula b) {
  return negation(implies(std::move(a), negation(std::move(b))));
}

Formula Formula::disj(Formula a, Formula b) {
  return implies(negation(std::move(a)), std::move(b));
}

Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Term& Formula::lhs() const {
  if (kind() != Kind::Eq) throw Error(ErrorCode::InvalidArgument, "formula is not an equation");
  return node_->lhs;
}

const Term& Formula::rhs() const {
  if (kind() != Kind::Eq) throw Error(ErrorCode::InvalidArgument, "formula is not an equation");
  return node_->rhs;
}

const Formula& Formula::inner() const {
  if (kind() != Kind::Not) throw Error(ErrorCode::InvalidArgument, "formula is not a negation");
  return node_->a;
}

const Formula& Formula::antecedent() const {
  if (kind() != Kind::Implies)
    throw Error(ErrorCode::InvalidArgument, "formula is not an implication");
  return node_->a;
}

const Formula& Formula::consequent() const {
  if (kind() != Kind::Implies)
    throw Error(ErrorCode::InvalidArgument, "formula is not an implication");
  return node_->b;
}

VarIndex Formula::bound_var() const {
  if (kind() != Kind::ForAll) throw Error(ErrorCode::InvalidArgument, "formula is not universal");
  return node_->var;
}

const Formula& Formula::body() const {
  if (kind() != Kind::ForAll) throw Error(ErrorCode::InvalidArgument, "formula is not universal");
  return node_->a;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.kind()) {
    case Formula::Kind::Eq: return a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs;
    case Formula::Kind::Not: return a.node_->a == b.node_->a;
    case Formula::Kind::Implies: return a.node_->a == b.node_->a && a.node_->b == b.node_->b;
    case Formula::Kind::ForAll: return a.node_->var == b.node_->var && a.node_->a == b.node_->a;
  }
  return false;
}

// --- printing ---------------------------------------------------------------

namespace {

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::Var:
      out += 'x';
      out += std::to_string(t.index());
      break;
    case Term::Kind::Succ:
      print_term(t.inner(), out);
      out += '\'';
      break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += '(';
      print_term(t.left(), out);
      out += t.kind() == Term::Kind::Add ? " + " : " * ";
      print_term(t.right(), out);
      out += ')';
      break;
  }
}

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      out += '(';
      print_term(f.lhs(), out);
      out += " = ";
      print_term(f.rhs(), out);
      out += ')';
      break;
    case Formula::Kind::Not:
      out += '~';
      print_formula(f.inner(), out);
      break;
    case Formula::Kind::Implies:
      out += '(';
      print_formula(f.antecedent(), out);
      out += " -> ";
      print_formula(f.consequent(), out);
      out += ')';
      break;
    case Formula::Kind::ForAll:
      out += "forall x";
      out += std::to_string(f.bound_var());
      out += " . ";
      print_formula(f.body(), out);
      break;
  }
}

void ast_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += "Zero"; break;
    case Term::Kind::Var: out += "Var " + std::to_string(t.index()); break;
    case Term::Kind::Succ:
      out += "Succ(";
      ast_term(t.inner(), out);
      out += ')';
      break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += t.kind() == Term::Kind::Add ? "Add(" : "Mul(";
      ast_term(t.left(), out);
      out += ", ";
      ast_term(t.right(), out);
      out += ')';
      break;
  }
}

void ast_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      out += "Eq(";
      ast_term(f.lhs(), out);
      out += ", ";
      ast_term(f.rhs(), out);
      out += ')';
      break;
    case Formula::Kind::Not:
      out += "Not(";
      ast_formula(f.inner(), out);
      out += ')';
      break;
    case Formula::Kind::Implies:
      out += "Implies(";
      ast_formula(f.antecedent(), out);
      out += ", ";
      ast_formula(f.consequent(), out);
      out += ')';
      break;
    case Formula::Kind::ForAll:
      out += "ForAll(" + std::to_string(f.bound_var()) + ", ";
      ast_formula(f.body(), out);
      out += ')';
      break;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

std::string to_ast_string(const Term& t) {
  std::string out;
  ast_term(t, out);
  return out;
}

std::string to_ast_string(const Formula& f) {
  std::string out;
  ast_formula(f, out);
  return out;
}

// --- tokenizer --------------------------------------------------------------

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto starts_with = [&](std::string_view word) { return text.substr(i, word.size()) == word; };
  auto is_word_char = [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](TokenKind kind) {
      tokens.push_back({kind, 0, start});
      ++i;
    };
    switch (ch) {
      case '0': single(TokenKind::Zero); continue;
      case '\'': single(TokenKind::Prime); continue;
      case '~': single(TokenKind::Tilde); continue;
      case '.': single(TokenKind::Dot); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case '=': single(TokenKind::Equals); continue;
      case '+': single(TokenKind::Plus); continue;
      case '*': single(TokenKind::Star); continue;
      default: break;
    }
    if (starts_with("->")) {
      tokens.push_back({TokenKind::Arrow, 0, start});
      i += 2;
    } else if (starts_with("<->")) {
      tokens.push_back({TokenKind::Iff, 0, start});
      i += 3;
    } else if (starts_with("/\\")) {
      tokens.push_back({TokenKind::And, 0, start});
      i += 2;
    } else if (starts_with("\\/")) {
      tokens.push_back({TokenKind::Or, 0, start});
      i += 2;
    } else if (is_word_char(ch)) {
      std::size_t end = i;
      while (end < text.size() && is_word_char(text[end])) ++end;
      std::string_view word = text.substr(i, end - i);
      if (word == "forall") {
        tokens.push_back({TokenKind::ForAll, 0, start});
      } else if (word == "exists") {
        tokens.push_back({TokenKind::Exists, 0, start});
      } else if (word[0] == 'x') {
        std::string_view digits = word.substr(1);
        bool ok = !digits.empty() && digits[0] >= '1' && digits[0] <= '9' && digits.size() <= 9 &&
                  std::all_of(digits.begin(), digits.end(),
                              [](char d) { return d >= '0' && d <= '9'; });
        if (!ok) throw ParseError(ErrorCode::BadVariable, start, "malformed variable '" + std::string(word) + "'");
        tokens.push_back({TokenKind::Var, static_cast<VarIndex>(std::stoul(std::string(digits))), start});
      } else {
        throw ParseError(ErrorCode::UnexpectedToken, start, "unknown word '" + std::string(word) + "'");
      }
      i = end;
    } else {
      throw ParseError(ErrorCode::UnexpectedToken, start, std::string("unexpected character '") + ch + "'");
    }
  }
  tokens.push_back({TokenKind::End, 0, text.size()});
  return tokens;
}

// --- parser -----------------------------------------------------------------

namespace {

const char* token_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Zero: return "'0'";
    case TokenKind::Prime: return "'''";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::ForAll: return "'forall'";
    case TokenKind::Exists: return "'exists'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Var: return "variable";
    case TokenKind::And: return "'/\\'";
    case TokenKind::Or: return "'\\/'";
    case TokenKind::Iff: return "'<->'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

bool is_connective(TokenKind kind) {
  return kind == TokenKind::Arrow || kind == TokenKind::And || kind == TokenKind::Or ||
         kind == TokenKind::Iff;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, bool require_dot, bool bare_equations = false)
      : tokens_(tokens), require_dot_(require_dot), bare_equations_(bare_equations) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[at];
  }

  [[noreturn]] void unexpected(const Token& tok, const char* wanted) const {
    if (tok.kind == TokenKind::RParen) {
      throw ParseError(ErrorCode::UnbalancedParen, tok.position,
                       std::string("unmatched ')' (expected ") + wanted + ")");
    }
    throw ParseError(ErrorCode::UnexpectedToken, tok.position,
                     std::string("expected ") + wanted + ", found " + token_name(tok.kind));
  }

  void expect(TokenKind kind) {
    if (peek().kind != kind) unexpected(peek(), token_name(kind));
    ++pos_;
  }

  void expect_close(std::size_t open_position) {
    if (peek().kind == TokenKind::End) {
      throw ParseError(ErrorCode::UnbalancedParen, open_position, "'(' is never closed");
    }
    expect(TokenKind::RParen);
  }

  void expect_end() {
    if (peek().kind != TokenKind::End) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::RParen)
        throw ParseError(ErrorCode::UnbalancedParen, tok.position, "unmatched ')'");
      throw ParseError(ErrorCode::UnexpectedToken, tok.position,
                       std::string("trailing input ") + token_name(tok.kind));
    }
  }

  // Index just past the parenthesised group that opens at `at`.
  std::size_t skip_group(std::size_t at) const {
    int depth = 0;
    for (std::size_t k = at; k < tokens_.size(); ++k) {
      if (tokens_[k].kind == TokenKind::LParen) ++depth;
      if (tokens_[k].kind == TokenKind::RParen && --depth == 0) return k + 1;
      if (tokens_[k].kind == TokenKind::End) break;
    }
    throw ParseError(ErrorCode::UnbalancedParen, tokens_[at].position, "'(' is never closed");
  }

  std::size_t skip_primes(std::size_t at) const {
    while (at < tokens_.size() && tokens_[at].kind == TokenKind::Prime) ++at;
    return at;
  }

  VarIndex variable() {
    if (peek().kind != TokenKind::Var) unexpected(peek(), "variable");
    return tokens_[pos_++].var;
  }

  // An equation written without its parentheses, e.g. "(x1 + 0) = x1".
  bool at_bare_equation() const {
    std::size_t at = pos_;
    switch (tokens_[at].kind) {
      case TokenKind::Zero:
      case TokenKind::Var:
        ++at;
        break;
      case TokenKind::LParen:
        at = skip_group(at);
        break;
      default:
        return false;
    }
    at = skip_primes(at);
    return at < tokens_.size() && tokens_[at].kind == TokenKind::Equals;
  }

  Formula formula() {
    const Token& tok = peek();
    if (bare_equations_ && at_bare_equation()) {
      Term l = term();
      expect(TokenKind::Equals);
      Term r = term();
      return Formula::eq(std::move(l), std::move(r));
    }
    switch (tok.kind) {
      case TokenKind::Tilde:
        ++pos_;
        return Formula::negation(formula());
      case TokenKind::ForAll:
      case TokenKind::Exists: {
        ++pos_;
        VarIndex var = variable();
        if (require_dot_) expect(TokenKind::Dot);
        Formula body = formula();
        return tok.kind == TokenKind::ForAll ? Formula::forall(var, std::move(body))
                                             : Formula::exists(var, std::move(body));
      }
      case TokenKind::LParen:
        return parenthesised();
      default:
        unexpected(tok, "formula");
    }
  }

  // "(" term "=" term ")" or "(" formula connective formula ")". The first
  // token inside the parenthesis decides which, skipping a leading group.
  Formula parenthesised() {
    std::size_t open = pos_;
    std::size_t open_position = peek().position;
    const Token& first = tokens_[std::min(open + 1, tokens_.size() - 1)];
    bool equation = false;
    switch (first.kind) {
      case TokenKind::Zero:
      case TokenKind::Var:
        equation = true;
        break;
      case TokenKind::Tilde:
      case TokenKind::ForAll:
      case TokenKind::Exists:
        equation = false;
        break;
      case TokenKind::LParen: {
        std::size_t after = skip_primes(skip_group(open + 1));
        TokenKind next = tokens_[std::min(after, tokens_.size() - 1)].kind;
        if (next == TokenKind::Equals || next == TokenKind::Plus || next == TokenKind::Star) {
          equation = true;
        } else if (is_connective(next)) {
          equation = false;
        } else {
          unexpected(tokens_[std::min(after, tokens_.size() - 1)], "'=' or a connective");
        }
        break;
      }
      case TokenKind::End:
        throw ParseError(ErrorCode::UnbalancedParen, open_position, "'(' is never closed");
      default:
        unexpected(first, "term or formula");
    }
    ++pos_;  // '('
    if (equation) {
      Term l = term();
      expect(TokenKind::Equals);
      Term r = term();
      expect_close(open_position);
      return Formula::eq(std::move(l), std::move(r));
    }
    Formula a = formula();
    TokenKind op = peek().kind;
    if (!is_connective(op)) unexpected(peek(), "'->', '/\\', '\\/' or '<->'");
    ++pos_;
    Formula b = formula();
    expect_close(open_position);
    switch (op) {
      case TokenKind::Arrow: return Formula::implies(std::move(a), std::move(b));
      case TokenKind::And: return Formula::conj(std::move(a), std::move(b));
      case TokenKind::Or: return Formula::disj(std::move(a), std::move(b));
      default: return Formula::iff(std::move(a), std::move(b));
    }
  }

  Term term() {
    Term t;
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Zero:
        ++pos_;
        t = Term::zero();
        break;
      case TokenKind::Var:
        ++pos_;
        t = Term::var(tok.var);
        break;
      case TokenKind::LParen: {
        std::size_t open_position = tok.position;
        ++pos_;
        Term l = term();
        TokenKind op = peek().kind;
        if (op != TokenKind::Plus && op != TokenKind::Star) unexpected(peek(), "'+' or '*'");
        ++pos_;
        Term r = term();
        expect_close(open_position);
        t = op == TokenKind::Plus ? Term::add(std::move(l), std::move(r))
                                  : Term::mul(std::move(l), std::move(r));
        break;
      }
      case TokenKind::End:
        unexpected(tok, "term");
      default:
        unexpected(tok, "term");
    }
    while (peek().kind == TokenKind::Prime) {
      ++pos_;
      t = Term::succ(std::move(t));
    }
    return t;
  }

  const std::vector<Token>& tokens_;
  bool require_dot_;
  bool bare_equations_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula_tokens(const std::vector<Token>& tokens, bool require_dot) {
  return Parser(tokens, require_dot).whole_formula();
}

Term parse_term_tokens(const std::vector<Token>& tokens) { return Parser(tokens, true).whole_term(); }

Formula parse_formula(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  try {
    return Parser(tokens, true).whole_formula();
  } catch (const ParseError& strict) {
    try {
      return Parser(tokens, true, true).whole_formula();
    } catch (const ParseError&) {
      throw strict;
    }
  }
}

Term parse_term(std::string_view text) { return parse_term_tokens(tokenize(text)); }

// --- variables and substitution ---------------------------------------------

namespace {

void collect_term_vars(const Term& t, std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: break;
    case Term::Kind::Var: out.insert(t.index()); break;
    case Term::Kind::Succ: collect_term_vars(t.inner(), out); break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_term_vars(t.left(), out);
      collect_term_vars(t.right(), out);
      break;
  }
}

void collect_free(const Formula& f, std::multiset<VarIndex>& bound, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      std::set<VarIndex> vars;
      collect_term_vars(f.lhs(), vars);
      collect_term_vars(f.rhs(), vars);
      for (VarIndex v : vars)
        if (!bound.contains(v)) out.insert(v);
      break;
    }
    case Formula::Kind::Not: collect_free(f.inner(), bound, out); break;
    case Formula::Kind::Implies:
      collect_free(f.antecedent(), bound, out);
      collect_free(f.consequent(), bound, out);
      break;
    case Formula::Kind::ForAll: {
      auto it = bound.insert(f.bound_var());
      collect_free(f.body(), bound, out);
      bound.erase(it);
      break;
    }
  }
}

}  // namespace

std::set<VarIndex> free_vars(const Term& t) {
  std::set<VarIndex> out;
  collect_term_vars(t, out);
  return out;
}

std::set<VarIndex> free_vars(const Formula& f) {
  std::multiset<VarIndex> bound;
  std::set<VarIndex> out;
  collect_free(f, bound, out);
  return out;
}

bool occurs(VarIndex var, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return false;
    case Term::Kind::Var: return t.index() == var;
    case Term::Kind::Succ: return occurs(var, t.inner());
    case Term::Kind::Add:
    case Term::Kind::Mul: return occurs(var, t.left()) || occurs(var, t.right());
  }
  return false;
}

bool occurs_free(VarIndex var, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return occurs(var, f.lhs()) || occurs(var, f.rhs());
    case Formula::Kind::Not: return occurs_free(var, f.inner());
    case Formula::Kind::Implies:
      return occurs_free(var, f.antecedent()) || occurs_free(var, f.consequent());
    case Formula::Kind::ForAll: return f.bound_var() != var && occurs_free(var, f.body());
  }
  return false;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return true;
    case Formula::Kind::Not: return is_quantifier_free(f.inner());
    case Formula::Kind::Implies:
      return is_quantifier_free(f.antecedent()) && is_quantifier_free(f.consequent());
    case Formula::Kind::ForAll: return false;
  }
  return false;
}

VarIndex max_var(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return t.index();
    case Term::Kind::Succ: return max_var(t.inner());
    case Term::Kind::Add:
    case Term::Kind::Mul: return std::max(max_var(t.left()), max_var(t.right()));
  }
  return 0;
}

VarIndex max_var(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return std::max(max_var(f.lhs()), max_var(f.rhs()));
    case Formula::Kind::Not: return max_var(f.inner());
    case Formula::Kind::Implies: return std::max(max_var(f.antecedent()), max_var(f.consequent()));
    case Formula::Kind::ForAll: return std::max(f.bound_var(), max_var(f.body()));
  }
  return 0;
}

bool is_numeral(const Term& t) {
  const Term* at = &t;
  while (at->kind() == Term::Kind::Succ) at = &at->inner();
  return at->kind() == Term::Kind::Zero;
}

std::uint64_t numeral_value(const Term& t) {
  std::uint64_t n = 0;
  const Term* at = &t;
  while (at->kind() == Term::Kind::Succ) {
    at = &at->inner();
    ++n;
  }
  if (at->kind() != Term::Kind::Zero) throw Error(ErrorCode::InvalidArgument, "term is not a numeral");
  return n;
}

Term substitute(const Term& t, VarIndex var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t.index() == var ? replacement : t;
    case Term::Kind::Succ: {
      if (!occurs(var, t)) return t;
      return Term::succ(substitute(t.inner(), var, replacement));
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      if (!occurs(var, t)) return t;
      Term l = substitute(t.left(), var, replacement);
      Term r = substitute(t.right(), var, replacement);
      return t.kind() == Term::Kind::Add ? Term::add(std::move(l), std::move(r))
                                         : Term::mul(std::move(l), std::move(r));
    }
  }
  return t;
}

namespace {

// Returns the first quantifier that would capture a variable of `t`, or 0.
VarIndex find_capture(const Term& t, VarIndex var, const Formula& f,
                      const std::set<VarIndex>& t_vars) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return 0;
    case Formula::Kind::Not: return find_capture(t, var, f.inner(), t_vars);
    case Formula::Kind::Implies: {
      VarIndex hit = find_capture(t, var, f.antecedent(), t_vars);
      return hit != 0 ? hit : find_capture(t, var, f.consequent(), t_vars);
    }
    case Formula::Kind::ForAll: {
      if (f.bound_var() == var) return 0;  // no free occurrence below
      if (t_vars.contains(f.bound_var()) && occurs_free(var, f.body())) return f.bound_var();
      return find_capture(t, var, f.body(), t_vars);
    }
  }
  return 0;
}

Formula substitute_unchecked(const Formula& f, VarIndex var, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
    case Formula::Kind::Not: return Formula::negation(substitute_unchecked(f.inner(), var, t));
    case Formula::Kind::Implies:
      return Formula::implies(substitute_unchecked(f.antecedent(), var, t),
                              substitute_unchecked(f.consequent(), var, t));
    case Formula::Kind::ForAll:
      if (f.bound_var() == var) return f;
      return Formula::forall(f.bound_var(), substitute_unchecked(f.body(), var, t));
  }
  return f;
}

}  // namespace

bool is_free_for(const Term& t, VarIndex var, const Formula& f) {
  return find_capture(t, var, f, free_vars(t)) == 0;
}

Formula substitute(const Formula& f, VarIndex var, const Term& t) {
  if (!occurs_free(var, f)) return f;
  VarIndex binder = find_capture(t, var, f, free_vars(t));
  if (binder != 0) {
    throw Error(ErrorCode::CaptureError, "substituting " + to_string(t) + " for x" +
                                             std::to_string(var) + " is captured by forall x" +
                                             std::to_string(binder));
  }
  return substitute_unchecked(f, var, t);
}

}  // namespace pwb
