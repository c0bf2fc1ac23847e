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

#include "pwb/pwb.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "pwb/error.hpp"
#include "pwb/godel.hpp"
#include "pwb/goodstein.hpp"
#include "pwb/interp.hpp"
#include "pwb/proof.hpp"
#include "pwb/syntax.hpp"
#include "pwb/tm.hpp"

struct pwb_formula {
  pwb::Formula value;
};
struct pwb_derivation {
  pwb::Derivation value;
};
struct pwb_corpus {
  pwb::TheoremCorpus value;
};
struct pwb_trace {
  pwb::GoodsteinTrace value;
};
struct pwb_machine {
  std::shared_ptr<const pwb::TuringMachine> value;
};
struct pwb_run {
  std::shared_ptr<const pwb::TuringMachine> machine;
  pwb::RunResult value;
};

namespace {

thread_local std::string last_error;

pwb_status to_status(pwb::ErrorCode code) {
  using pwb::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return PWB_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnexpectedToken: return PWB_ERR_UNEXPECTED_TOKEN;
    case ErrorCode::UnbalancedParen: return PWB_ERR_UNBALANCED_PAREN;
    case ErrorCode::BadVariable: return PWB_ERR_BAD_VARIABLE;
    case ErrorCode::CaptureError: return PWB_ERR_CAPTURE;
    case ErrorCode::ProofSyntax: return PWB_ERR_PROOF_SYNTAX;
    case ErrorCode::NotAccepted: return PWB_ERR_NOT_ACCEPTED;
    case ErrorCode::OpenHypothesis: return PWB_ERR_OPEN_HYPOTHESIS;
    case ErrorCode::UncheckedInput: return PWB_ERR_UNCHECKED_INPUT;
    case ErrorCode::UncheckedCorpus: return PWB_ERR_UNCHECKED_CORPUS;
    case ErrorCode::NotACode: return PWB_ERR_NOT_A_CODE;
    case ErrorCode::HasHypotheses: return PWB_ERR_HAS_HYPOTHESES;
    case ErrorCode::UnboundVariable: return PWB_ERR_UNBOUND_VARIABLE;
    case ErrorCode::HasQuantifier: return PWB_ERR_HAS_QUANTIFIER;
    case ErrorCode::BadBase: return PWB_ERR_BAD_BASE;
    case ErrorCode::BadBound: return PWB_ERR_BAD_BOUND;
    case ErrorCode::ZeroTerm: return PWB_ERR_ZERO_TERM;
    case ErrorCode::TooLarge: return PWB_ERR_TOO_LARGE;
    case ErrorCode::InvalidMachine: return PWB_ERR_INVALID_MACHINE;
    case ErrorCode::HistoryMismatch: return PWB_ERR_HISTORY_MISMATCH;
  }
  return PWB_ERR_INTERNAL;
}

template <typename F>
pwb_status guard(F&& body) noexcept {
  try {
    body();
    last_error.clear();
    return PWB_OK;
  } catch (const pwb::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PWB_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PWB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PWB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw pwb::Error(pwb::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

pwb::Natural natural(const char* text, const char* name) {
  require(text, name);
  return pwb::parse_natural(text);
}

pwb::Assignment parse_assignment(const char* text) {
  pwb::Assignment a;
  if (!text) return a;
  std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw pwb::Error(pwb::ErrorCode::InvalidArgument, "assignment item '" + item + "' lacks '='");
    }
    pwb::Term var = pwb::parse_term(item.substr(0, eq));
    if (var.kind() != pwb::Term::Kind::Var) {
      throw pwb::Error(pwb::ErrorCode::InvalidArgument, "'" + item.substr(0, eq) + "' is not a variable");
    }
    std::string value = item.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    a[var.index()] = pwb::parse_natural(value);
  }
  return a;
}

void fill_verdict(const pwb::Verdict& v, pwb_verdict* out) {
  out->kind = static_cast<pwb_verdict_kind>(v.kind);
  out->witness = v.witness;
  out->bound = v.bound;
  out->tuple = nullptr;
  if (!v.witness_vars.empty()) {
    std::string t;
    for (std::size_t i = 0; i < v.witness_vars.size(); ++i) {
      if (i) t += ',';
      t += "x" + std::to_string(v.witness_vars[i]) + "=" + std::to_string(v.witness_tuple[i]);
    }
    out->tuple = dup(t);
  }
}

}  // namespace

extern "C" {

const char* pwb_last_error(void) { return last_error.c_str(); }

const char* pwb_status_name(pwb_status status) {
  switch (status) {
    case PWB_OK: return "Ok";
    case PWB_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case PWB_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > PWB_OK && status < PWB_ERR_OUT_OF_MEMORY) {
    return pwb::error_code_name(static_cast<pwb::ErrorCode>(status - 1));
  }
  return "Unknown";
}

void pwb_string_free(char* s) { std::free(s); }

// ---- syntax --------------------------------------------------------------------

pwb_status pwb_formula_parse(const char* text, pwb_formula** out, size_t* position) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    try {
      *out = new pwb_formula{pwb::parse_formula(text)};
    } catch (const pwb::ParseError& e) {
      if (position) *position = e.position();
      throw;
    }
  });
}

void pwb_formula_free(pwb_formula* f) { delete f; }

pwb_status pwb_formula_print(const pwb_formula* f, char** out) {
  return guard([&] {
    require(f, "formula");
    put(out, pwb::to_string(f->value));
  });
}

pwb_status pwb_formula_ast(const pwb_formula* f, char** out) {
  return guard([&] {
    require(f, "formula");
    put(out, pwb::to_ast_string(f->value));
  });
}

pwb_status pwb_formula_free_vars(const pwb_formula* f, char** out) {
  return guard([&] {
    require(f, "formula");
    std::string s;
    for (pwb::VarIndex v : pwb::free_vars(f->value)) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
    put(out, s);
  });
}

pwb_status pwb_term_check(const char* text, char** canonical, size_t* position) {
  return guard([&] {
    require(text, "text");
    try {
      put(canonical, pwb::to_string(pwb::parse_term(text)));
    } catch (const pwb::ParseError& e) {
      if (position) *position = e.position();
      throw;
    }
  });
}

// ---- proofs ----------------------------------------------------------------------

pwb_status pwb_derivation_parse(const char* text, pwb_derivation** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new pwb_derivation{pwb::parse_derivation(text)};
  });
}

void pwb_derivation_free(pwb_derivation* d) { delete d; }

pwb_status pwb_derivation_format(const pwb_derivation* d, char** out) {
  return guard([&] {
    require(d, "derivation");
    put(out, pwb::format_derivation(d->value));
  });
}

size_t pwb_derivation_length(const pwb_derivation* d) { return d ? d->value.lines.size() : 0; }

size_t pwb_derivation_hypotheses(const pwb_derivation* d) {
  return d ? d->value.hypotheses.size() : 0;
}

pwb_status pwb_derivation_check(const pwb_derivation* d, pwb_check_report* out, char** detail) {
  return guard([&] {
    require(d, "derivation");
    require(out, "out");
    pwb::CheckReport r = pwb::check(d->value);
    out->accepted = r.accepted;
    out->is_proof = r.is_proof;
    out->line = r.line;
    out->reason = pwb::reject_reason_name(r.reason);
    put(detail, r.detail);
  });
}

pwb_status pwb_derivation_deduce(const pwb_derivation* d, pwb_derivation** out) {
  return guard([&] {
    require(d, "derivation");
    require(out, "out");
    *out = new pwb_derivation{pwb::deduction_transform(d->value)};
  });
}

pwb_status pwb_omega_scan(const pwb_derivation* const* proofs, size_t count, uint64_t bound,
                          char** out) {
  return guard([&] {
    if (count) require(proofs, "proofs");
    std::vector<pwb::Derivation> items;
    for (size_t i = 0; i < count; ++i) {
      require(proofs[i], "proof");
      items.push_back(proofs[i]->value);
    }
    std::string s;
    for (const pwb::OmegaHit& hit : pwb::omega_evidence_scan(items, bound)) {
      s += pwb::to_string(hit.negated_universal) + "\t" + std::to_string(hit.var) + "\n";
    }
    put(out, s);
  });
}

// ---- Goedel coding -----------------------------------------------------------------

pwb_status pwb_godel_encode_formula(const pwb_formula* f, char** code) {
  return guard([&] {
    require(f, "formula");
    put(code, pwb::encode_formula(f->value).to_string());
  });
}

pwb_status pwb_godel_encode_term(const char* term_text, char** code) {
  return guard([&] {
    require(term_text, "term");
    put(code, pwb::encode_term(pwb::parse_term(term_text)).to_string());
  });
}

pwb_status pwb_godel_decode_formula(const char* code, pwb_formula** out) {
  return guard([&] {
    require(code, "code");
    require(out, "out");
    *out = new pwb_formula{pwb::decode_formula(pwb::GodelCode::parse(code))};
  });
}

pwb_status pwb_godel_decode_term(const char* code, char** term_text) {
  return guard([&] {
    require(code, "code");
    put(term_text, pwb::to_string(pwb::decode_term(pwb::GodelCode::parse(code))));
  });
}

pwb_status pwb_godel_encode_proof(const pwb_derivation* d, char** code) {
  return guard([&] {
    require(d, "derivation");
    put(code, pwb::encode_proof(d->value).to_string());
  });
}

pwb_status pwb_godel_proof_pair(const char* x, const char* y, int* out) {
  return guard([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    try {
      *out = pwb::proof_pair(pwb::GodelCode::parse(x), pwb::GodelCode::parse(y));
    } catch (const pwb::Error& e) {
      if (e.code() != pwb::ErrorCode::NotACode) throw;
      *out = 0;
    }
  });
}

pwb_status pwb_beta_eval(const char* b, const char* c, const char* i, char** out) {
  return guard([&] {
    put(out, pwb::to_decimal(pwb::beta_eval(natural(b, "b"), natural(c, "c"), natural(i, "i"))));
  });
}

pwb_status pwb_beta_encode(const char* const* values, size_t count, char** b, char** c) {
  return guard([&] {
    if (count) require(values, "values");
    std::vector<pwb::Natural> seq;
    for (size_t i = 0; i < count; ++i) seq.push_back(natural(values[i], "value"));
    pwb::BetaPair pair = pwb::encode_sequence(seq);
    put(b, pwb::to_decimal(pair.b));
    put(c, pwb::to_decimal(pair.c));
  });
}

// ---- interpretation --------------------------------------------------------------

const char* pwb_verdict_kind_name(pwb_verdict_kind kind) {
  return pwb::verdict_kind_name(static_cast<pwb::Verdict::Kind>(kind));
}

void pwb_verdict_clear(pwb_verdict* v) {
  if (!v) return;
  std::free(v->tuple);
  v->tuple = nullptr;
}

pwb_status pwb_eval_term(const char* term_text, const char* assignment, char** value) {
  return guard([&] {
    require(term_text, "term");
    put(value, pwb::to_decimal(pwb::eval_term(pwb::parse_term(term_text), parse_assignment(assignment))));
  });
}

pwb_status pwb_eval_qf(const pwb_formula* f, const char* assignment, int* out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = pwb::eval_qf(f->value, parse_assignment(assignment));
  });
}

pwb_status pwb_eval_tarski(const pwb_formula* f, uint64_t bound, const char* assignment, int* out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = pwb::eval_tarski_bounded(f->value, bound, parse_assignment(assignment));
  });
}

pwb_status pwb_eval_algorithmic(const pwb_formula* f, uint64_t budget, const char* assignment,
                                pwb_verdict* out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    fill_verdict(pwb::eval_algorithmic(f->value, budget, parse_assignment(assignment)), out);
  });
}

pwb_status pwb_corpus_new(pwb_corpus** out) {
  return guard([&] {
    require(out, "out");
    *out = new pwb_corpus{};
  });
}

void pwb_corpus_free(pwb_corpus* c) { delete c; }

pwb_status pwb_corpus_add(pwb_corpus* c, const pwb_derivation* d) {
  return guard([&] {
    require(c, "corpus");
    require(d, "derivation");
    c->value.add(d->value);
  });
}

pwb_status pwb_eval_godelian(const pwb_formula* f, const pwb_corpus* c, uint64_t budget,
                             pwb_verdict* out) {
  return guard([&] {
    require(f, "formula");
    require(c, "corpus");
    require(out, "out");
    fill_verdict(pwb::eval_godelian(f->value, c->value, budget), out);
  });
}

// ---- Goodstein -----------------------------------------------------------------------

pwb_status pwb_hbr(const char* m, const char* base, char** rep, char** mirror) {
  return guard([&] {
    pwb::Natural b = natural(base, "base");
    pwb::HereditaryRep r = pwb::hbr(natural(m, "m"), b);
    put(rep, pwb::to_string(r, b));
    put(mirror, pwb::to_string(pwb::mirror_ordinal(r)));
  });
}

pwb_status pwb_hbr_value(const char* m, const char* base, const char* read_base, char** value) {
  return guard([&] {
    pwb::HereditaryRep r = pwb::hbr(natural(m, "m"), natural(base, "base"));
    put(value, pwb::to_decimal(pwb::hbr_value(r, natural(read_base, "read_base"))));
  });
}

pwb_status pwb_goodstein_run(const char* m, uint64_t max_steps, size_t value_bits, pwb_trace** out) {
  return guard([&] {
    require(out, "out");
    *out = new pwb_trace{pwb::goodstein_sequence(natural(m, "m"), max_steps, value_bits)};
  });
}

void pwb_trace_free(pwb_trace* t) { delete t; }

size_t pwb_trace_length(const pwb_trace* t) { return t ? t->value.entries.size() : 0; }

int pwb_trace_terminated(const pwb_trace* t) { return t && t->value.terminated; }

int pwb_trace_descends(const pwb_trace* t) {
  return t && !t->value.entries.empty() && pwb::descent_check(t->value);
}

int pwb_trace_step_descends(const pwb_trace* t, size_t k) {
  if (!t || k == 0 || k >= t->value.entries.size()) return 0;
  return pwb::compare_shapes(t->value.entries[k].rep, t->value.entries[k - 1].rep) < 0;
}

pwb_status pwb_trace_entry(const pwb_trace* t, size_t k, uint64_t* step, char** base, char** value,
                           char** rep, char** mirror) {
  return guard([&] {
    require(t, "trace");
    if (k >= t->value.entries.size()) {
      throw pwb::Error(pwb::ErrorCode::InvalidArgument, "entry index out of range");
    }
    const pwb::GoodsteinEntry& e = t->value.entries[k];
    if (step) *step = e.step;
    put(base, pwb::to_decimal(e.base));
    if (value) *value = e.value ? dup(pwb::to_decimal(*e.value)) : nullptr;
    put(rep, pwb::to_string(e.rep, e.base));
    put(mirror, pwb::to_string(pwb::mirror_ordinal(e.rep)));
  });
}

pwb_status pwb_zdiff(const char* m, const char* base, const char* z, int* sign, char** exact,
                     int* borrow) {
  return guard([&] {
    pwb::Natural b = natural(base, "base");
    pwb::ZDiff d = pwb::z_substituted_diff(pwb::hbr(natural(m, "m"), b), b, natural(z, "z"));
    if (sign) *sign = d.sign;
    if (exact) *exact = d.exact ? dup(pwb::to_decimal(*d.exact)) : nullptr;
    if (borrow) *borrow = d.branch == pwb::StepBranch::Borrow;
  });
}

pwb_status pwb_ordinal_compare(const char* m1, const char* m2, const char* base, int* out) {
  return guard([&] {
    require(out, "out");
    pwb::Natural b = natural(base, "base");
    auto c = pwb::cnf_compare(pwb::mirror_ordinal(pwb::hbr(natural(m1, "m1"), b)),
                              pwb::mirror_ordinal(pwb::hbr(natural(m2, "m2"), b)));
    *out = c < 0 ? -1 : c > 0 ? 1 : 0;
  });
}

// ---- Turing machines -------------------------------------------------------------------

pwb_status pwb_machine_parse(const char* text, pwb_machine** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new pwb_machine{std::make_shared<const pwb::TuringMachine>(pwb::parse_machine(text))};
  });
}

pwb_status pwb_machine_zoo(const char* name, pwb_machine** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    for (auto& [zoo_name, tm] : pwb::zoo::all()) {
      if (zoo_name == name) {
        *out = new pwb_machine{std::make_shared<const pwb::TuringMachine>(std::move(tm))};
        return;
      }
    }
    throw pwb::Error(pwb::ErrorCode::InvalidArgument, std::string("no machine named ") + name);
  });
}

void pwb_machine_free(pwb_machine* m) { delete m; }

pwb_status pwb_machine_format(const pwb_machine* m, char** out) {
  return guard([&] {
    require(m, "machine");
    put(out, pwb::format_machine(*m->value));
  });
}

pwb_status pwb_tm_run(const pwb_machine* m, const char* input, uint64_t fuel, int oracle,
                      pwb_step_fn on_step, void* user, pwb_run** out) {
  return guard([&] {
    require(m, "machine");
    require(out, "out");
    pwb::RunOptions options;
    options.fuel = fuel;
    options.oracle = oracle != 0;
    if (on_step) {
      const pwb::TuringMachine& tm = *m->value;
      options.observer = [&tm, on_step, user](std::uint64_t k, const pwb::ID& id) {
        on_step(k, pwb::format_id(tm, id).c_str(), user);
      };
    }
    auto run = std::make_unique<pwb_run>();
    run->machine = m->value;
    run->value = pwb::run_with_oracle(*m->value, input ? input : "", options);
    *out = run.release();
  });
}

void pwb_run_free(pwb_run* r) { delete r; }

pwb_run_kind pwb_run_get_kind(const pwb_run* r) {
  return r ? static_cast<pwb_run_kind>(r->value.kind) : PWB_RUN_FUEL_EXHAUSTED;
}

const char* pwb_run_kind_name(pwb_run_kind kind) {
  return pwb::run_kind_name(static_cast<pwb::RunResult::Kind>(kind));
}

uint64_t pwb_run_steps(const pwb_run* r) { return r ? r->value.steps : 0; }
uint64_t pwb_run_first(const pwb_run* r) { return r ? r->value.first : 0; }
uint64_t pwb_run_repeat(const pwb_run* r) { return r ? r->value.repeat : 0; }
int pwb_run_history_capped(const pwb_run* r) { return r && r->value.history_capped; }

pwb_status pwb_run_description(const pwb_run* r, char** out) {
  return guard([&] {
    require(r, "run");
    put(out, pwb::format_id(*r->machine, r->value.id));
  });
}

pwb_status pwb_run_tape(const pwb_run* r, char** out) {
  return guard([&] {
    require(r, "run");
    put(out, pwb::tape_contents(*r->machine, r->value.id));
  });
}

pwb_status pwb_run_replay(const pwb_run* r, int* out) {
  return guard([&] {
    require(r, "run");
    require(out, "out");
    *out = pwb::replay_cycle(*r->machine, r->value, r->value.history);
  });
}

}  // extern "C"
