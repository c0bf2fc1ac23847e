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

#include "pwb/interp.hpp"

#include <cmath>
#include <functional>

#include "pwb/error.hpp"

namespace pwb {

namespace {

__extension__ typedef unsigned __int128 u128;

[[noreturn]] void unbound(VarIndex v) {
  throw Error(ErrorCode::UnboundVariable, "x" + std::to_string(v) + " has no value");
}

void require_bound(const Formula& f, const Assignment& a) {
  for (VarIndex v : free_vars(f)) {
    if (!a.count(v)) unbound(v);
  }
}

Verdict make(Verdict::Kind kind) {
  Verdict v;
  v.kind = kind;
  return v;
}

// Cantor pairing inverse: z -> (x, y) with z = (x+y)(x+y+1)/2 + y.
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z) {
  auto tri = [](u128 w) { return w * (w + 1) / 2; };
  u128 w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(z) + 1) - 1) / 2);
  while (w > 0 && tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  auto y = static_cast<std::uint64_t>(z - tri(w));
  return {static_cast<std::uint64_t>(w) - y, y};
}

// Searches the innermost block: tuples in Cantor order 0..budget.
Verdict scan_block(Prenex::Quantifier q, const std::vector<VarIndex>& vars, std::uint64_t budget,
                   const std::function<bool(const std::vector<std::uint64_t>&)>& matrix) {
  const bool universal = q == Prenex::Quantifier::ForAll;
  for (std::uint64_t n = 0;; ++n) {
    std::vector<std::uint64_t> tuple = cantor_untuple(n, vars.size());
    if (matrix(tuple) != universal) {
      Verdict v = make(universal ? Verdict::Kind::FalseAt : Verdict::Kind::WitnessAt);
      v.witness = n;
      v.witness_vars = vars;
      v.witness_tuple = std::move(tuple);
      return v;
    }
    if (n == budget) break;
  }
  Verdict v = make(universal ? Verdict::Kind::VerifiedUpTo : Verdict::Kind::NoWitnessUpTo);
  v.bound = budget;
  return v;
}

Verdict bounded_verdict(const Prenex& p, std::uint64_t budget,
                        const std::function<bool(const Assignment&)>& base,
                        const Assignment& outer) {
  if (p.prefix.empty()) {
    return make(base(outer) ? Verdict::Kind::True : Verdict::Kind::False);
  }
  const Prenex::Quantifier first = p.prefix.front().first;
  std::size_t block_start = p.prefix.size();
  while (block_start > 0 && p.prefix[block_start - 1].first == p.prefix.back().first) --block_start;
  if (block_start > 0) {
    // Alternation: the inner verdicts are never definite in the direction
    // the outer quantifier needs.
    Verdict v = make(first == Prenex::Quantifier::ForAll ? Verdict::Kind::VerifiedUpTo
                                                         : Verdict::Kind::NoWitnessUpTo);
    v.bound = budget;
    return v;
  }
  std::vector<VarIndex> vars;
  for (const auto& [q, var] : p.prefix) vars.push_back(var);
  Assignment a = outer;
  return scan_block(first, vars, budget, [&](const std::vector<std::uint64_t>& tuple) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = from_u64(tuple[i]);
    return base(a);
  });
}

// Every binder ends up with a distinct variable that is not free in the
// input, which makes pulling quantifiers outward safe. Binders keep their
// own variable when it is not taken yet.
struct PrenexBuilder {
  VarIndex next;
  std::set<VarIndex> used;

  static Prenex::Quantifier flip(Prenex::Quantifier q) {
    return q == Prenex::Quantifier::ForAll ? Prenex::Quantifier::Exists
                                           : Prenex::Quantifier::ForAll;
  }

  Prenex quantified(Prenex::Quantifier q, VarIndex x, const Formula& body) {
    VarIndex fresh = x;
    if (!used.insert(x).second) {
      fresh = next++;
      used.insert(fresh);
    }
    Prenex inner = run(fresh == x ? body : substitute(body, x, Term::var(fresh)));
    inner.prefix.insert(inner.prefix.begin(), {q, fresh});
    return inner;
  }

  Prenex run(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq:
        return Prenex{{}, f};
      case Formula::Kind::ForAll:
        return quantified(Prenex::Quantifier::ForAll, f.bound_var(), f.body());
      case Formula::Kind::Not: {
        const Formula& g = f.inner();
        if (g.kind() == Formula::Kind::ForAll && g.body().kind() == Formula::Kind::Not) {
          return quantified(Prenex::Quantifier::Exists, g.bound_var(), g.body().inner());
        }
        Prenex p = run(g);
        for (auto& entry : p.prefix) entry.first = flip(entry.first);
        p.matrix = Formula::negation(p.matrix);
        return p;
      }
      case Formula::Kind::Implies: {
        Prenex a = run(f.antecedent());
        Prenex b = run(f.consequent());
        Prenex out;
        for (auto& entry : a.prefix) out.prefix.push_back({flip(entry.first), entry.second});
        out.prefix.insert(out.prefix.end(), b.prefix.begin(), b.prefix.end());
        out.matrix = Formula::implies(a.matrix, b.matrix);
        return out;
      }
    }
    return Prenex{{}, f};
  }
};

}  // namespace

bool Verdict::definite() const noexcept {
  return kind == Kind::True || kind == Kind::False || kind == Kind::FalseAt ||
         kind == Kind::WitnessAt;
}

bool Verdict::holds() const noexcept { return kind == Kind::True || kind == Kind::WitnessAt; }

const char* verdict_kind_name(Verdict::Kind kind) noexcept {
  switch (kind) {
    case Verdict::Kind::True: return "True";
    case Verdict::Kind::False: return "False";
    case Verdict::Kind::FalseAt: return "FalseAt";
    case Verdict::Kind::WitnessAt: return "WitnessAt";
    case Verdict::Kind::VerifiedUpTo: return "VerifiedUpTo";
    case Verdict::Kind::NoWitnessUpTo: return "NoWitnessUpTo";
  }
  return "Unknown";
}

Natural eval_term(const Term& t, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: {
      auto it = a.find(t.index());
      if (it == a.end()) unbound(t.index());
      return it->second;
    }
    case Term::Kind::Succ: {
      // Long successor chains are numerals; count them without recursion.
      std::uint64_t marks = 0;
      const Term* cur = &t;
      while (cur->kind() == Term::Kind::Succ) {
        ++marks;
        cur = &cur->inner();
      }
      return eval_term(*cur, a) + from_u64(marks);
    }
    case Term::Kind::Add: return eval_term(t.left(), a) + eval_term(t.right(), a);
    case Term::Kind::Mul: return eval_term(t.left(), a) * eval_term(t.right(), a);
  }
  return 0;
}

bool eval_qf(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return eval_term(f.lhs(), a) == eval_term(f.rhs(), a);
    case Formula::Kind::Not: return !eval_qf(f.inner(), a);
    case Formula::Kind::Implies: return !eval_qf(f.antecedent(), a) || eval_qf(f.consequent(), a);
    case Formula::Kind::ForAll:
      throw Error(ErrorCode::HasQuantifier, "quantifier in " + to_string(f));
  }
  return false;
}

namespace {

bool tarski(const Formula& f, std::uint64_t bound, Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return eval_term(f.lhs(), a) == eval_term(f.rhs(), a);
    case Formula::Kind::Not: return !tarski(f.inner(), bound, a);
    case Formula::Kind::Implies:
      return !tarski(f.antecedent(), bound, a) || tarski(f.consequent(), bound, a);
    case Formula::Kind::ForAll: {
      const VarIndex x = f.bound_var();
      auto saved = a.find(x) == a.end() ? std::optional<Natural>() : std::optional(a[x]);
      bool all = true;
      for (std::uint64_t n = 0; all; ++n) {
        a[x] = from_u64(n);
        all = tarski(f.body(), bound, a);
        if (n == bound) break;
      }
      if (saved) {
        a[x] = *saved;
      } else {
        a.erase(x);
      }
      return all;
    }
  }
  return false;
}

}  // namespace

bool eval_tarski_bounded(const Formula& f, std::uint64_t bound, const Assignment& a) {
  require_bound(f, a);
  Assignment scratch = a;
  return tarski(f, bound, scratch);
}

Prenex to_prenex(const Formula& f) { return PrenexBuilder{max_var(f) + 1, free_vars(f)}.run(f); }

Formula prenex_formula(const Prenex& p) {
  Formula out = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it) {
    out = it->first == Prenex::Quantifier::ForAll ? Formula::forall(it->second, out)
                                                  : Formula::exists(it->second, out);
  }
  return out;
}

Formula universal_closure(const Formula& f) {
  Formula out = f;
  std::set<VarIndex> vars = free_vars(f);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

Verdict eval_algorithmic(const Formula& f, std::uint64_t budget, const Assignment& a) {
  require_bound(f, a);
  const Prenex p = to_prenex(f);
  return bounded_verdict(p, budget, [&](const Assignment& s) { return eval_qf(p.matrix, s); }, a);
}

// --- corpus semantics -------------------------------------------------------------

TheoremCorpus::TheoremCorpus(std::span<const Derivation> proofs) {
  for (const Derivation& d : proofs) add(d);
}

void TheoremCorpus::add(const Derivation& proof) {
  if (!proof.hypotheses.empty()) {
    throw Error(ErrorCode::UncheckedCorpus, "corpus derivations must be hypothesis-free");
  }
  CheckReport report = check(proof);
  if (!report.accepted) {
    throw Error(ErrorCode::UncheckedCorpus, "corpus derivation rejected at line " +
                                                std::to_string(report.line) + ": " +
                                                reject_reason_name(report.reason));
  }
  for (const ProofLine& line : proof.lines) theorems_.insert(line.formula);
}

bool TheoremCorpus::proves(const Formula& f) const { return theorems_.count(f) > 0; }

Verdict eval_godelian(const Formula& f, const TheoremCorpus& corpus, std::uint64_t budget) {
  if (!is_closed(f)) unbound(*free_vars(f).begin());
  const Prenex p = to_prenex(f);
  return bounded_verdict(
      p, budget,
      [&](const Assignment& s) {
        Formula instance = p.matrix;
        for (const auto& [var, value] : s) instance = substitute(instance, var, Term::numeral(to_u64(value)));
        return corpus.proves(instance);
      },
      {});
}

// --- tuple coding -----------------------------------------------------------------

std::vector<std::uint64_t> cantor_untuple(std::uint64_t code, std::size_t arity) {
  std::vector<std::uint64_t> out;
  if (arity == 0) return out;
  out.reserve(arity);
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [x, rest] = unpair(code);
    out.push_back(x);
    code = rest;
  }
  out.push_back(code);
  return out;
}

std::uint64_t cantor_tuple(std::span<const std::uint64_t> values) {
  if (values.empty()) return 0;
  u128 code = values.back();
  for (std::size_t i = values.size() - 1; i-- > 0;) {
    u128 s = values[i] + code;
    code = s * (s + 1) / 2 + code;
    if (code > UINT64_MAX) throw Error(ErrorCode::TooLarge, "tuple code exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(code);
}

}  // namespace pwb
