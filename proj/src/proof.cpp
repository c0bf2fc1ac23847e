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

#include "pwb/proof.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "pwb/error.hpp"

namespace pwb {

namespace {

constexpr std::array<const char*, 14> kAxiomNames = {
    "A1", "A2", "A3", "A4", "A5", "PA1", "PA2", "PA3", "PA4", "PA5", "PA6", "PA7", "PA8", "PA9",
};

Formula imp(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }
Formula eq(Term a, Term b) { return Formula::eq(std::move(a), std::move(b)); }
Term v(VarIndex i) { return Term::var(i); }

template <typename T>
const T& need(const std::optional<T>& field, Axiom axiom, const char* name) {
  if (!field) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(axiom_name(axiom)) + " needs a binding for " + name);
  }
  return *field;
}

VarIndex need_var(const Instantiation& inst, Axiom axiom) {
  VarIndex x = need(inst.x, axiom, "x");
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "variable index must be positive");
  return x;
}

}  // namespace

const char* axiom_name(Axiom axiom) noexcept {
  return kAxiomNames[static_cast<std::size_t>(axiom)];
}

std::optional<Axiom> axiom_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kAxiomNames.size(); ++i) {
    if (name == kAxiomNames[i]) return static_cast<Axiom>(i);
  }
  return std::nullopt;
}

const char* reject_reason_name(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::Empty: return "Empty";
    case RejectReason::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case RejectReason::BadHypothesis: return "BadHypothesis";
    case RejectReason::BadMP: return "BadMP";
    case RejectReason::BadGen: return "BadGen";
    case RejectReason::ForwardReference: return "ForwardReference";
    case RejectReason::GenOnHypothesisVariable: return "GenOnHypothesisVariable";
  }
  return "Unknown";
}

Formula arithmetic_axiom(Axiom axiom) {
  const Term x1 = v(1), x2 = v(2), x3 = v(3), z = Term::zero();
  switch (axiom) {
    case Axiom::PA1: return imp(eq(x1, x2), imp(eq(x1, x3), eq(x2, x3)));
    case Axiom::PA2: return imp(eq(x1, x2), eq(Term::succ(x1), Term::succ(x2)));
    case Axiom::PA3: return Formula::negation(eq(z, Term::succ(x1)));
    case Axiom::PA4: return imp(eq(Term::succ(x1), Term::succ(x2)), eq(x1, x2));
    case Axiom::PA5: return eq(Term::add(x1, z), x1);
    case Axiom::PA6: return eq(Term::add(x1, Term::succ(x2)), Term::succ(Term::add(x1, x2)));
    case Axiom::PA7: return eq(Term::mul(x1, z), z);
    case Axiom::PA8: return eq(Term::mul(x1, Term::succ(x2)), Term::add(Term::mul(x1, x2), x1));
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument,
              std::string(axiom_name(axiom)) + " is a schema, not a fixed axiom");
}

Formula instantiate(Axiom axiom, const Instantiation& inst) {
  switch (axiom) {
    case Axiom::A1: {
      const Formula& b = need(inst.b, axiom, "B");
      return imp(b, imp(need(inst.c, axiom, "C"), b));
    }
    case Axiom::A2: {
      const Formula& b = need(inst.b, axiom, "B");
      const Formula& c = need(inst.c, axiom, "C");
      const Formula& d = need(inst.d, axiom, "D");
      return imp(imp(b, imp(c, d)), imp(imp(b, c), imp(b, d)));
    }
    case Axiom::A3: {
      const Formula& b = need(inst.b, axiom, "B");
      const Formula& c = need(inst.c, axiom, "C");
      Formula nc = Formula::negation(c);
      return imp(imp(nc, Formula::negation(b)), imp(imp(nc, b), c));
    }
    case Axiom::A4: {
      VarIndex x = need_var(inst, axiom);
      const Formula& b = need(inst.b, axiom, "B");
      const Term& t = need(inst.t, axiom, "t");
      if (!is_free_for(t, x, b)) {
        throw Error(ErrorCode::InvalidArgument,
                    "A4: " + to_string(t) + " is not free for x" + std::to_string(x) + " in " +
                        to_string(b));
      }
      return imp(Formula::forall(x, b), substitute(b, x, t));
    }
    case Axiom::A5: {
      VarIndex x = need_var(inst, axiom);
      const Formula& b = need(inst.b, axiom, "B");
      const Formula& c = need(inst.c, axiom, "C");
      if (occurs_free(x, b)) {
        throw Error(ErrorCode::InvalidArgument,
                    "A5: x" + std::to_string(x) + " occurs free in " + to_string(b));
      }
      return imp(Formula::forall(x, imp(b, c)), imp(b, Formula::forall(x, c)));
    }
    case Axiom::PA9: {
      VarIndex x = need_var(inst, axiom);
      const Formula& f = need(inst.f, axiom, "F");
      Formula base = substitute(f, x, Term::zero());
      Formula step = Formula::forall(x, imp(f, substitute(f, x, Term::succ(v(x)))));
      return imp(base, imp(step, Formula::forall(x, f)));
    }
    default:
      return arithmetic_axiom(axiom);
  }
}

// --- recognition --------------------------------------------------------------

namespace {

// Matches `pattern` against `target` where free occurrences of `x` in the
// pattern stand for a single unknown term.
struct A4Matcher {
  VarIndex x;
  std::optional<Term> t;

  bool term(const Term& p, const Term& s, bool bound) {
    if (p.kind() == Term::Kind::Var && p.index() == x && !bound) {
      if (t) return *t == s;
      t = s;
      return true;
    }
    if (p.kind() != s.kind()) return false;
    switch (p.kind()) {
      case Term::Kind::Zero: return true;
      case Term::Kind::Var: return p.index() == s.index();
      case Term::Kind::Succ: return term(p.inner(), s.inner(), bound);
      case Term::Kind::Add:
      case Term::Kind::Mul:
        return term(p.left(), s.left(), bound) && term(p.right(), s.right(), bound);
    }
    return false;
  }

  bool formula(const Formula& p, const Formula& s, bool bound) {
    if (p.kind() != s.kind()) return false;
    switch (p.kind()) {
      case Formula::Kind::Eq:
        return term(p.lhs(), s.lhs(), bound) && term(p.rhs(), s.rhs(), bound);
      case Formula::Kind::Not: return formula(p.inner(), s.inner(), bound);
      case Formula::Kind::Implies:
        return formula(p.antecedent(), s.antecedent(), bound) &&
               formula(p.consequent(), s.consequent(), bound);
      case Formula::Kind::ForAll:
        if (p.bound_var() != s.bound_var()) return false;
        return formula(p.body(), s.body(), bound || p.bound_var() == x);
    }
    return false;
  }
};

bool is_imp(const Formula& f) { return f.kind() == Formula::Kind::Implies; }
bool is_not(const Formula& f) { return f.kind() == Formula::Kind::Not; }
bool is_all(const Formula& f) { return f.kind() == Formula::Kind::ForAll; }

std::optional<AxiomStep> confirm(Axiom axiom, Instantiation inst, const Formula& f) {
  try {
    if (instantiate(axiom, inst) == f) return AxiomStep{axiom, std::move(inst)};
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<AxiomStep> recognize_a4(const Formula& f) {
  if (!is_imp(f) || !is_all(f.antecedent())) return std::nullopt;
  const Formula& all = f.antecedent();
  A4Matcher m{all.bound_var(), std::nullopt};
  if (!m.formula(all.body(), f.consequent(), false)) return std::nullopt;
  Instantiation inst;
  inst.x = all.bound_var();
  inst.b = all.body();
  inst.t = m.t ? *m.t : Term::var(all.bound_var());
  return confirm(Axiom::A4, std::move(inst), f);
}

std::optional<AxiomStep> recognize_pa9(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.consequent())) return std::nullopt;
  const Formula& rest = f.consequent();
  if (!is_all(rest.consequent())) return std::nullopt;
  Instantiation inst;
  inst.x = rest.consequent().bound_var();
  inst.f = rest.consequent().body();
  return confirm(Axiom::PA9, std::move(inst), f);
}

}  // namespace

std::optional<AxiomStep> recognize_axiom(const Formula& f) {
  for (Axiom a : {Axiom::PA1, Axiom::PA2, Axiom::PA3, Axiom::PA4, Axiom::PA5, Axiom::PA6,
                  Axiom::PA7, Axiom::PA8}) {
    if (arithmetic_axiom(a) == f) return AxiomStep{a, {}};
  }
  if (is_imp(f)) {
    const Formula& lhs = f.antecedent();
    const Formula& rhs = f.consequent();
    // A1: B -> (C -> B)
    if (is_imp(rhs)) {
      Instantiation inst;
      inst.b = lhs;
      inst.c = rhs.antecedent();
      if (auto hit = confirm(Axiom::A1, std::move(inst), f)) return hit;
    }
    // A2: (B -> (C -> D)) -> ((B -> C) -> (B -> D))
    if (is_imp(lhs) && is_imp(lhs.consequent())) {
      Instantiation inst;
      inst.b = lhs.antecedent();
      inst.c = lhs.consequent().antecedent();
      inst.d = lhs.consequent().consequent();
      if (auto hit = confirm(Axiom::A2, std::move(inst), f)) return hit;
    }
    // A3: (~C -> ~B) -> ((~C -> B) -> C)
    if (is_imp(lhs) && is_not(lhs.antecedent()) && is_not(lhs.consequent())) {
      Instantiation inst;
      inst.b = lhs.consequent().inner();
      inst.c = lhs.antecedent().inner();
      if (auto hit = confirm(Axiom::A3, std::move(inst), f)) return hit;
    }
    // A5: (forall x (B -> C)) -> (B -> forall x C)
    if (is_all(lhs) && is_imp(lhs.body())) {
      Instantiation inst;
      inst.x = lhs.bound_var();
      inst.b = lhs.body().antecedent();
      inst.c = lhs.body().consequent();
      if (auto hit = confirm(Axiom::A5, std::move(inst), f)) return hit;
    }
  }
  if (auto hit = recognize_a4(f)) return hit;
  return recognize_pa9(f);
}

// --- checking -------------------------------------------------------------------

CheckReport check(const Derivation& d) {
  CheckReport report;
  if (d.lines.empty()) {
    report.reason = RejectReason::Empty;
    report.detail = "derivation has no lines";
    return report;
  }
  // Hypotheses each line depends on, for the Gen side condition.
  std::vector<std::set<std::size_t>> deps(d.lines.size());

  auto reject = [&](std::size_t i, RejectReason reason, std::string detail) {
    report.accepted = false;
    report.line = i + 1;
    report.reason = reason;
    report.detail = std::move(detail);
    return report;
  };

  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    const ProofLine& line = d.lines[i];
    const Justification& j = line.justification;

    if (const auto* ax = std::get_if<AxiomStep>(&j)) {
      Formula expected;
      try {
        expected = instantiate(ax->axiom, ax->inst);
      } catch (const Error& e) {
        return reject(i, RejectReason::NotAnAxiomInstance, e.what());
      }
      if (!(expected == line.formula)) {
        return reject(i, RejectReason::NotAnAxiomInstance,
                      std::string(axiom_name(ax->axiom)) + " instance is " + to_string(expected));
      }
    } else if (const auto* h = std::get_if<HypothesisStep>(&j)) {
      if (h->index >= d.hypotheses.size()) {
        return reject(i, RejectReason::BadHypothesis,
                      "no hypothesis " + std::to_string(h->index + 1));
      }
      if (!(d.hypotheses[h->index] == line.formula)) {
        return reject(i, RejectReason::BadHypothesis,
                      "hypothesis " + std::to_string(h->index + 1) + " is " +
                          to_string(d.hypotheses[h->index]));
      }
      deps[i].insert(h->index);
    } else if (const auto* mp = std::get_if<ModusPonens>(&j)) {
      if (mp->minor >= i || mp->major >= i) {
        return reject(i, RejectReason::ForwardReference, "MP cites a line that is not earlier");
      }
      const Formula& major = d.lines[mp->major].formula;
      if (!is_imp(major) || !(major.antecedent() == d.lines[mp->minor].formula) ||
          !(major.consequent() == line.formula)) {
        return reject(i, RejectReason::BadMP,
                      "line " + std::to_string(mp->major + 1) + " is not line " +
                          std::to_string(mp->minor + 1) + " -> this formula");
      }
      deps[i] = deps[mp->minor];
      deps[i].insert(deps[mp->major].begin(), deps[mp->major].end());
    } else {
      const auto& gen = std::get<Generalisation>(j);
      if (gen.line >= i) {
        return reject(i, RejectReason::ForwardReference, "Gen cites a line that is not earlier");
      }
      if (gen.var == 0 || !(Formula::forall(gen.var, d.lines[gen.line].formula) == line.formula)) {
        return reject(i, RejectReason::BadGen,
                      "expected forall x" + std::to_string(gen.var) + " over line " +
                          std::to_string(gen.line + 1));
      }
      for (std::size_t k : deps[gen.line]) {
        if (occurs_free(gen.var, d.hypotheses[k])) {
          return reject(i, RejectReason::GenOnHypothesisVariable,
                        "x" + std::to_string(gen.var) + " is free in hypothesis " +
                            std::to_string(k + 1));
        }
      }
      deps[i] = deps[gen.line];
    }
  }
  report.accepted = true;
  report.is_proof = d.hypotheses.empty();
  return report;
}

// --- deduction theorem --------------------------------------------------------------

Derivation deduction_transform(const Derivation& d) {
  if (d.hypotheses.empty()) {
    throw Error(ErrorCode::InvalidArgument, "derivation has no hypothesis to discharge");
  }
  CheckReport report = check(d);
  if (!report.accepted) {
    throw Error(ErrorCode::NotAccepted, "line " + std::to_string(report.line) + ": " +
                                            reject_reason_name(report.reason));
  }
  const std::size_t a_index = d.hypotheses.size() - 1;
  const Formula& a = d.hypotheses[a_index];
  if (!is_closed(a)) {
    throw Error(ErrorCode::OpenHypothesis, "discharged hypothesis " + to_string(a) +
                                               " has free variables");
  }

  Derivation out;
  out.hypotheses.assign(d.hypotheses.begin(), d.hypotheses.end() - 1);

  const std::size_t n = d.lines.size();
  std::vector<bool> uses_a(n, false);
  std::vector<std::optional<std::size_t>> plain(n), with_a(n);

  auto emit = [&](Formula f, Justification j) {
    out.lines.push_back({std::move(f), std::move(j)});
    return out.lines.size() - 1;
  };
  auto a1 = [](Formula b, Formula c) {
    Instantiation inst;
    inst.b = std::move(b);
    inst.c = std::move(c);
    return AxiomStep{Axiom::A1, std::move(inst)};
  };
  auto a2 = [](Formula b, Formula c, Formula dd) {
    Instantiation inst;
    inst.b = std::move(b);
    inst.c = std::move(c);
    inst.d = std::move(dd);
    return AxiomStep{Axiom::A2, std::move(inst)};
  };
  // A -> C_i for a line that does not use A: weaken its plain copy.
  auto weakened = [&](std::size_t i) {
    if (with_a[i]) return *with_a[i];
    const Formula& c = d.lines[i].formula;
    std::size_t ax = emit(imp(c, imp(a, c)), a1(c, a));
    with_a[i] = emit(imp(a, c), ModusPonens{*plain[i], ax});
    return *with_a[i];
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Formula& c = d.lines[i].formula;
    const Justification& j = d.lines[i].justification;
    if (const auto* h = std::get_if<HypothesisStep>(&j)) {
      uses_a[i] = h->index == a_index;
    } else if (const auto* mp = std::get_if<ModusPonens>(&j)) {
      uses_a[i] = uses_a[mp->minor] || uses_a[mp->major];
    } else if (const auto* g = std::get_if<Generalisation>(&j)) {
      uses_a[i] = uses_a[g->line];
    }

    if (!uses_a[i]) {
      Justification copy = j;
      if (auto* mp = std::get_if<ModusPonens>(&copy)) {
        *mp = ModusPonens{*plain[mp->minor], *plain[mp->major]};
      } else if (auto* g = std::get_if<Generalisation>(&copy)) {
        g->line = *plain[g->line];
      }
      plain[i] = emit(c, std::move(copy));
      continue;
    }

    if (std::holds_alternative<HypothesisStep>(j)) {
      // A -> A from A1 and A2.
      Formula aa = imp(a, a);
      Formula a_aa = imp(a, aa);
      std::size_t l1 = emit(imp(imp(a, imp(aa, a)), imp(a_aa, aa)), a2(a, aa, a));
      std::size_t l2 = emit(imp(a, imp(aa, a)), a1(a, aa));
      std::size_t l3 = emit(imp(a_aa, aa), ModusPonens{l2, l1});
      std::size_t l4 = emit(a_aa, a1(a, a));
      with_a[i] = emit(aa, ModusPonens{l4, l3});
    } else if (const auto* mp = std::get_if<ModusPonens>(&j)) {
      const Formula& cj = d.lines[mp->minor].formula;
      std::size_t pj = uses_a[mp->minor] ? *with_a[mp->minor] : weakened(mp->minor);
      std::size_t pk = uses_a[mp->major] ? *with_a[mp->major] : weakened(mp->major);
      std::size_t ax = emit(imp(imp(a, imp(cj, c)), imp(imp(a, cj), imp(a, c))), a2(a, cj, c));
      std::size_t m1 = emit(imp(imp(a, cj), imp(a, c)), ModusPonens{pk, ax});
      with_a[i] = emit(imp(a, c), ModusPonens{pj, m1});
    } else {
      const auto& g = std::get<Generalisation>(j);
      const Formula& cj = d.lines[g.line].formula;
      std::size_t gen = emit(Formula::forall(g.var, imp(a, cj)),
                             Generalisation{*with_a[g.line], g.var});
      Instantiation inst;
      inst.x = g.var;
      inst.b = a;
      inst.c = cj;
      std::size_t ax = emit(imp(Formula::forall(g.var, imp(a, cj)), imp(a, c)),
                            AxiomStep{Axiom::A5, std::move(inst)});
      with_a[i] = emit(imp(a, c), ModusPonens{gen, ax});
    }
  }
  if (!uses_a[n - 1]) weakened(n - 1);
  return out;
}

// --- omega evidence ---------------------------------------------------------------

std::vector<OmegaHit> omega_evidence_scan(std::span<const Derivation> theorems,
                                          std::uint64_t bound) {
  std::unordered_set<Formula, FormulaHash> proved;
  for (std::size_t k = 0; k < theorems.size(); ++k) {
    const Derivation& d = theorems[k];
    if (!d.hypotheses.empty()) {
      throw Error(ErrorCode::UncheckedInput,
                  "corpus entry " + std::to_string(k + 1) + " has hypotheses");
    }
    CheckReport report = check(d);
    if (!report.accepted) {
      throw Error(ErrorCode::UncheckedInput, "corpus entry " + std::to_string(k + 1) +
                                                 " is rejected at line " +
                                                 std::to_string(report.line));
    }
    for (const ProofLine& line : d.lines) proved.insert(line.formula);
  }

  std::vector<OmegaHit> hits;
  std::unordered_set<Formula, FormulaHash> reported;
  for (const Derivation& d : theorems) {
    for (const ProofLine& line : d.lines) {
      const Formula& f = line.formula;
      if (!is_not(f) || !is_all(f.inner()) || reported.count(f)) continue;
      VarIndex x = f.inner().bound_var();
      const Formula& body = f.inner().body();
      bool all = true;
      for (std::uint64_t n = 0; all; ++n) {
        all = proved.count(substitute(body, x, Term::numeral(n))) > 0;
        if (n == bound) break;
      }
      if (all) {
        reported.insert(f);
        hits.push_back({f, x, body});
      }
    }
  }
  return hits;
}

}  // namespace pwb
