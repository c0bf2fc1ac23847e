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

#include "pwb/godel.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "pwb/error.hpp"

namespace pwb {

namespace {

enum : std::uint64_t {
  kZero = 1,
  kPrime = 3,
  kTilde = 5,
  kArrow = 7,
  kForAll = 9,
  kLParen = 11,
  kRParen = 13,
  kEquals = 15,
  kPlus = 17,
  kStar = 19,
};

std::uint64_t var_code(VarIndex k) { return 21 + 2 * std::uint64_t{k}; }

// Cap on the factorial argument in encode_sequence.
constexpr std::uint64_t kMaxFactorialArg = 100000;

void emit(const Term& t, std::vector<std::uint64_t>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out.push_back(kZero); return;
    case Term::Kind::Var: out.push_back(var_code(t.index())); return;
    case Term::Kind::Succ:
      emit(t.inner(), out);
      out.push_back(kPrime);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back(kLParen);
      emit(t.left(), out);
      out.push_back(t.kind() == Term::Kind::Add ? kPlus : kStar);
      emit(t.right(), out);
      out.push_back(kRParen);
      return;
  }
}

void emit(const Formula& f, std::vector<std::uint64_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      out.push_back(kLParen);
      emit(f.lhs(), out);
      out.push_back(kEquals);
      emit(f.rhs(), out);
      out.push_back(kRParen);
      return;
    case Formula::Kind::Not:
      out.push_back(kTilde);
      emit(f.inner(), out);
      return;
    case Formula::Kind::Implies:
      out.push_back(kLParen);
      emit(f.antecedent(), out);
      out.push_back(kArrow);
      emit(f.consequent(), out);
      out.push_back(kRParen);
      return;
    case Formula::Kind::ForAll:
      out.push_back(kForAll);
      out.push_back(var_code(f.bound_var()));
      emit(f.body(), out);
      return;
  }
}

GodelCode code_of(const std::vector<std::uint64_t>& symbols) {
  std::vector<Natural> exps;
  exps.reserve(symbols.size());
  for (std::uint64_t s : symbols) exps.push_back(from_u64(s));
  return GodelCode(std::move(exps));
}

std::vector<Token> tokens_of(const GodelCode& code) {
  std::vector<Token> tokens;
  const auto& exps = code.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!fits_u64(exps[i])) {
      throw ParseError(ErrorCode::NotACode, i, "symbol code out of range");
    }
    std::uint64_t s = to_u64(exps[i]);
    Token tok{TokenKind::End, 0, i};
    switch (s) {
      case kZero: tok.kind = TokenKind::Zero; break;
      case kPrime: tok.kind = TokenKind::Prime; break;
      case kTilde: tok.kind = TokenKind::Tilde; break;
      case kArrow: tok.kind = TokenKind::Arrow; break;
      case kForAll: tok.kind = TokenKind::ForAll; break;
      case kLParen: tok.kind = TokenKind::LParen; break;
      case kRParen: tok.kind = TokenKind::RParen; break;
      case kEquals: tok.kind = TokenKind::Equals; break;
      case kPlus: tok.kind = TokenKind::Plus; break;
      case kStar: tok.kind = TokenKind::Star; break;
      default:
        if (s < 23 || s % 2 == 0 || (s - 21) / 2 > std::numeric_limits<VarIndex>::max()) {
          throw ParseError(ErrorCode::NotACode, i, "no symbol has code " + std::to_string(s));
        }
        tok.kind = TokenKind::Var;
        tok.var = static_cast<VarIndex>((s - 21) / 2);
    }
    tokens.push_back(tok);
  }
  tokens.push_back(Token{TokenKind::End, 0, exps.size()});
  return tokens;
}

template <typename T, typename Parse>
T decode_with(const GodelCode& code, Parse parse) {
  std::vector<Token> tokens = tokens_of(code);
  T out;
  try {
    out = parse(tokens);
  } catch (const ParseError& e) {
    throw ParseError(ErrorCode::NotACode, e.position(), "not a well-formed symbol string");
  }
  std::vector<std::uint64_t> again;
  emit(out, again);
  if (code_of(again) == code) return out;
  throw Error(ErrorCode::NotACode, "symbol string is not in canonical form");
}

}  // namespace

std::uint64_t prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes{2, 3};
  std::lock_guard lock(mutex);
  while (primes.size() <= i) {
    for (std::uint64_t candidate = primes.back() + 2;; candidate += 2) {
      bool is_prime = true;
      for (std::uint64_t p : primes) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) {
        primes.push_back(candidate);
        break;
      }
    }
  }
  return primes[i];
}

// --- GodelCode ------------------------------------------------------------------

GodelCode::GodelCode(std::vector<Natural> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw Error(ErrorCode::NotACode, "empty exponent vector");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (sgn(exponents_[i]) <= 0) {
      throw Error(ErrorCode::NotACode,
                  "prime " + std::to_string(prime(i)) + " has exponent " + to_decimal(exponents_[i]));
    }
  }
}

GodelCode GodelCode::from_natural(const Natural& n) {
  if (n < 2) throw Error(ErrorCode::NotACode, to_decimal(n) + " codes no symbol string");
  Natural rest = n;
  std::vector<Natural> exps;
  for (std::size_t i = 0; rest > 1; ++i) {
    const unsigned long p = static_cast<unsigned long>(prime(i));
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) {
      throw Error(ErrorCode::NotACode, to_decimal(n) + " is not divisible by " + std::to_string(p));
    }
    exps.push_back(from_u64(e));
  }
  return GodelCode(std::move(exps));
}

GodelCode GodelCode::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw Error(ErrorCode::InvalidArgument, "empty code");
  if (compact.find_first_not_of("0123456789") == std::string::npos) {
    return from_natural(parse_natural(compact));
  }
  std::vector<Natural> exps;
  std::string_view rest = compact;
  while (true) {
    std::size_t star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    std::size_t caret = factor.find('^');
    Natural base = parse_natural(factor.substr(0, caret));
    Natural e = caret == std::string_view::npos ? Natural(1) : parse_natural(factor.substr(caret + 1));
    if (base != from_u64(prime(exps.size()))) {
      throw Error(ErrorCode::NotACode, "factor " + std::string(factor) + " is out of order; expected base " +
                                           std::to_string(prime(exps.size())));
    }
    exps.push_back(std::move(e));
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return GodelCode(std::move(exps));
}

double GodelCode::log2_value() const {
  double total = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    total += exponents_[i].get_d() * std::log2(static_cast<double>(prime(i)));
  }
  return total;
}

std::optional<Natural> GodelCode::value(std::size_t max_bits) const {
  if (log2_value() > static_cast<double>(max_bits) + 1) return std::nullopt;
  Natural out = 1;
  Natural power;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(prime(i)),
                  static_cast<unsigned long>(to_u64(exponents_[i])));
    out *= power;
  }
  if (mpz_sizeinbase(out.get_mpz_t(), 2) > max_bits) return std::nullopt;
  return out;
}

std::string GodelCode::to_factored_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += '*';
    out += std::to_string(prime(i)) + '^' + to_decimal(exponents_[i]);
  }
  return out;
}

std::string GodelCode::to_string(std::size_t max_bits) const {
  if (auto v = value(max_bits)) return to_decimal(*v);
  return to_factored_string();
}

// --- formulas and proofs -------------------------------------------------------------

std::vector<std::uint64_t> symbol_string(const Term& t) {
  std::vector<std::uint64_t> out;
  emit(t, out);
  return out;
}

std::vector<std::uint64_t> symbol_string(const Formula& f) {
  std::vector<std::uint64_t> out;
  emit(f, out);
  return out;
}

GodelCode encode_term(const Term& t) { return code_of(symbol_string(t)); }
GodelCode encode_formula(const Formula& f) { return code_of(symbol_string(f)); }

Term decode_term(const GodelCode& code) {
  return decode_with<Term>(code, [](const auto& tokens) { return parse_term_tokens(tokens); });
}

Formula decode_formula(const GodelCode& code) {
  return decode_with<Formula>(
      code, [](const auto& tokens) { return parse_formula_tokens(tokens, false); });
}

GodelCode encode_sequence_of(std::span<const Formula> formulas) {
  std::vector<Natural> exps;
  exps.reserve(formulas.size());
  for (const Formula& f : formulas) {
    const GodelCode code = encode_formula(f);
    exps.push_back(*code.value(std::numeric_limits<std::size_t>::max() / 2));
  }
  return GodelCode(std::move(exps));
}

GodelCode encode_proof(const Derivation& d) {
  if (!d.hypotheses.empty()) {
    throw Error(ErrorCode::HasHypotheses, "only hypothesis-free derivations have proof codes");
  }
  std::vector<Formula> formulas;
  formulas.reserve(d.lines.size());
  for (const ProofLine& line : d.lines) formulas.push_back(line.formula);
  return encode_sequence_of(formulas);
}

std::vector<Formula> decode_proof(const GodelCode& code) {
  std::vector<Formula> out;
  out.reserve(code.exponents().size());
  for (const Natural& e : code.exponents()) {
    out.push_back(decode_formula(GodelCode::from_natural(e)));
  }
  return out;
}

std::optional<Derivation> reconstruct_proof(std::span<const Formula> formulas) {
  Derivation d;
  std::unordered_map<Formula, std::size_t, FormulaHash> first;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const Formula& f = formulas[i];
    std::optional<Justification> just;
    if (auto ax = recognize_axiom(f)) {
      just = *ax;
    }
    for (std::size_t k = 0; !just && k < i; ++k) {
      const Formula& major = formulas[k];
      if (major.kind() != Formula::Kind::Implies || !(major.consequent() == f)) continue;
      if (auto it = first.find(major.antecedent()); it != first.end()) {
        just = ModusPonens{it->second, k};
      }
    }
    if (!just && f.kind() == Formula::Kind::ForAll) {
      if (auto it = first.find(f.body()); it != first.end()) {
        just = Generalisation{it->second, f.bound_var()};
      }
    }
    if (!just) return std::nullopt;
    d.lines.push_back({f, *just});
    first.emplace(f, i);
  }
  return d;
}

bool proof_pair(const GodelCode& x, const GodelCode& y) {
  try {
    std::vector<Formula> formulas = decode_proof(x);
    if (!(encode_formula(formulas.back()) == y)) return false;
    std::optional<Derivation> d = reconstruct_proof(formulas);
    return d && check(*d).is_proof;
  } catch (const Error&) {
    return false;
  }
}

bool proof_pair(const Natural& x, const Natural& y) {
  try {
    return proof_pair(GodelCode::from_natural(x), GodelCode::from_natural(y));
  } catch (const Error&) {
    return false;
  }
}

// --- beta function ------------------------------------------------------------------

Natural beta_eval(const Natural& b, const Natural& c, const Natural& i) {
  Natural modulus = 1 + (i + 1) * c;
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::vector<Natural> beta_moduli(const Natural& c, std::size_t length) {
  std::vector<Natural> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(1 + from_u64(i + 1) * c);
  return out;
}

bool pairwise_coprime(std::span<const Natural> moduli) {
  Natural g;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t k = i + 1; k < moduli.size(); ++k) {
      mpz_gcd(g.get_mpz_t(), moduli[i].get_mpz_t(), moduli[k].get_mpz_t());
      if (g != 1) return false;
    }
  }
  return true;
}

BetaPair encode_sequence(std::span<const Natural> seq) {
  if (seq.empty()) throw Error(ErrorCode::InvalidArgument, "cannot encode an empty sequence");
  Natural j = from_u64(seq.size() - 1);
  for (const Natural& s : seq) {
    if (sgn(s) < 0) throw Error(ErrorCode::InvalidArgument, "sequence values must be natural");
    if (s > j) j = s;
  }
  if (j > kMaxFactorialArg) {
    throw Error(ErrorCode::TooLarge, "j = " + to_decimal(j) + " makes j! impractically large");
  }
  BetaPair out;
  mpz_fac_ui(out.c.get_mpz_t(), static_cast<unsigned long>(to_u64(j)));

  std::vector<Natural> moduli = beta_moduli(out.c, seq.size());
  Natural b = 0, product = 1, inv, t;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Natural& m = moduli[i];
    mpz_invert(inv.get_mpz_t(), product.get_mpz_t(), m.get_mpz_t());
    t = (seq[i] - b) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    b += product * t;
    product *= m;
  }
  out.b = b;
  return out;
}

Formula less_than(const Term& a, const Term& b, VarIndex z) {
  return Formula::exists(z, Formula::eq(Term::add(a, Term::succ(Term::var(z))), b));
}

Formula less_equal(const Term& a, const Term& b, VarIndex z) {
  return Formula::exists(z, Formula::eq(Term::add(a, Term::var(z)), b));
}

Formula beta_formula(const Term& x1, const Term& x2, const Term& x3, const Term& x4) {
  VarIndex top = std::max({max_var(x1), max_var(x2), max_var(x3), max_var(x4)});
  VarIndex w = top + 1, z = top + 2;
  Term one = Term::numeral(1);
  Term modulus = Term::add(one, Term::mul(Term::add(x3, one), x2));
  Formula split = Formula::eq(x1, Term::add(Term::mul(modulus, Term::var(w)), x4));
  return Formula::exists(w, Formula::conj(split, less_than(x4, modulus, z)));
}

}  // namespace pwb
