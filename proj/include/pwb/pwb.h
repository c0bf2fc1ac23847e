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

/* C interface to the PA workbench.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions return a pwb_status; on failure pwb_last_error() describes the
 * problem (the message is per thread and valid until the next call).
 * Strings returned through char** are heap allocated and must be released
 * with pwb_string_free. Large naturals cross the interface as decimal text.
 */
#ifndef PWB_PWB_H
#define PWB_PWB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PWB_BUILDING)
#define PWB_API __declspec(dllexport)
#else
#define PWB_API __declspec(dllimport)
#endif
#else
#define PWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pwb_status {
  PWB_OK = 0,
  PWB_ERR_INVALID_ARGUMENT,
  PWB_ERR_UNEXPECTED_TOKEN,
  PWB_ERR_UNBALANCED_PAREN,
  PWB_ERR_BAD_VARIABLE,
  PWB_ERR_CAPTURE,
  PWB_ERR_PROOF_SYNTAX,
  PWB_ERR_NOT_ACCEPTED,
  PWB_ERR_OPEN_HYPOTHESIS,
  PWB_ERR_UNCHECKED_INPUT,
  PWB_ERR_UNCHECKED_CORPUS,
  PWB_ERR_NOT_A_CODE,
  PWB_ERR_HAS_HYPOTHESES,
  PWB_ERR_UNBOUND_VARIABLE,
  PWB_ERR_HAS_QUANTIFIER,
  PWB_ERR_BAD_BASE,
  PWB_ERR_BAD_BOUND,
  PWB_ERR_ZERO_TERM,
  PWB_ERR_TOO_LARGE,
  PWB_ERR_INVALID_MACHINE,
  PWB_ERR_HISTORY_MISMATCH,
  PWB_ERR_OUT_OF_MEMORY,
  PWB_ERR_INTERNAL
} pwb_status;

typedef struct pwb_formula pwb_formula;
typedef struct pwb_derivation pwb_derivation;
typedef struct pwb_corpus pwb_corpus;
typedef struct pwb_trace pwb_trace;
typedef struct pwb_machine pwb_machine;
typedef struct pwb_run pwb_run;

PWB_API const char* pwb_last_error(void);
PWB_API const char* pwb_status_name(pwb_status status);
PWB_API void pwb_string_free(char* s);

/* ---- syntax ---------------------------------------------------------------- */

/* On a parse error, *position (if non-null) receives the byte offset. */
PWB_API pwb_status pwb_formula_parse(const char* text, pwb_formula** out, size_t* position);
PWB_API void pwb_formula_free(pwb_formula* f);
PWB_API pwb_status pwb_formula_print(const pwb_formula* f, char** out);
PWB_API pwb_status pwb_formula_ast(const pwb_formula* f, char** out);
/* Free variables as comma-separated indices, e.g. "1,2". */
PWB_API pwb_status pwb_formula_free_vars(const pwb_formula* f, char** out);
PWB_API pwb_status pwb_term_check(const char* text, char** canonical, size_t* position);

/* ---- proofs ---------------------------------------------------------------- */

typedef struct pwb_check_report {
  int accepted;
  int is_proof;
  size_t line;        /* 1-based; 0 when accepted */
  const char* reason; /* static string, "None" when accepted */
} pwb_check_report;

PWB_API pwb_status pwb_derivation_parse(const char* text, pwb_derivation** out);
PWB_API void pwb_derivation_free(pwb_derivation* d);
PWB_API pwb_status pwb_derivation_format(const pwb_derivation* d, char** out);
PWB_API size_t pwb_derivation_length(const pwb_derivation* d);
PWB_API size_t pwb_derivation_hypotheses(const pwb_derivation* d);
/* `detail` may be null; otherwise it receives the rejection detail. */
PWB_API pwb_status pwb_derivation_check(const pwb_derivation* d, pwb_check_report* out,
                                        char** detail);
PWB_API pwb_status pwb_derivation_deduce(const pwb_derivation* d, pwb_derivation** out);
/* Finds ~forall x F with F(0..bound) all proved. Result is one line per hit,
 * "<negated formula>\t<variable index>". */
PWB_API pwb_status pwb_omega_scan(const pwb_derivation* const* proofs, size_t count,
                                  uint64_t bound, char** out);

/* ---- Goedel coding --------------------------------------------------------- */

/* Codes print as decimal text when small, otherwise as "2^e1*3^e2*...". */
PWB_API pwb_status pwb_godel_encode_formula(const pwb_formula* f, char** code);
PWB_API pwb_status pwb_godel_encode_term(const char* term_text, char** code);
PWB_API pwb_status pwb_godel_decode_formula(const char* code, pwb_formula** out);
PWB_API pwb_status pwb_godel_decode_term(const char* code, char** term_text);
PWB_API pwb_status pwb_godel_encode_proof(const pwb_derivation* d, char** code);
/* Malformed codes give *out = 0, not an error. */
PWB_API pwb_status pwb_godel_proof_pair(const char* x, const char* y, int* out);
PWB_API pwb_status pwb_beta_eval(const char* b, const char* c, const char* i, char** out);
PWB_API pwb_status pwb_beta_encode(const char* const* values, size_t count, char** b, char** c);

/* ---- interpretation -------------------------------------------------------- */

typedef enum pwb_verdict_kind {
  PWB_VERDICT_TRUE = 0,
  PWB_VERDICT_FALSE,
  PWB_VERDICT_FALSE_AT,
  PWB_VERDICT_WITNESS_AT,
  PWB_VERDICT_VERIFIED_UP_TO,
  PWB_VERDICT_NO_WITNESS_UP_TO
} pwb_verdict_kind;

typedef struct pwb_verdict {
  pwb_verdict_kind kind;
  uint64_t witness; /* FALSE_AT, WITNESS_AT */
  uint64_t bound;   /* VERIFIED_UP_TO, NO_WITNESS_UP_TO */
  char* tuple;      /* "x3=1,x4=0" for witnesses, else null; free with pwb_verdict_clear */
} pwb_verdict;

PWB_API const char* pwb_verdict_kind_name(pwb_verdict_kind kind);
PWB_API void pwb_verdict_clear(pwb_verdict* v);

/* Assignments are written "x1=4,x2=7" (empty or null for none). */
PWB_API pwb_status pwb_eval_term(const char* term_text, const char* assignment, char** value);
PWB_API pwb_status pwb_eval_qf(const pwb_formula* f, const char* assignment, int* out);
PWB_API pwb_status pwb_eval_tarski(const pwb_formula* f, uint64_t bound, const char* assignment,
                                   int* out);
PWB_API pwb_status pwb_eval_algorithmic(const pwb_formula* f, uint64_t budget,
                                        const char* assignment, pwb_verdict* out);

PWB_API pwb_status pwb_corpus_new(pwb_corpus** out);
PWB_API void pwb_corpus_free(pwb_corpus* c);
PWB_API pwb_status pwb_corpus_add(pwb_corpus* c, const pwb_derivation* d);
PWB_API pwb_status pwb_eval_godelian(const pwb_formula* f, const pwb_corpus* c, uint64_t budget,
                                     pwb_verdict* out);

/* ---- Goodstein --------------------------------------------------------------- */

PWB_API pwb_status pwb_hbr(const char* m, const char* base, char** rep, char** mirror);
PWB_API pwb_status pwb_hbr_value(const char* m, const char* base, const char* read_base,
                                 char** value);
PWB_API pwb_status pwb_goodstein_run(const char* m, uint64_t max_steps, size_t value_bits,
                                     pwb_trace** out);
PWB_API void pwb_trace_free(pwb_trace* t);
PWB_API size_t pwb_trace_length(const pwb_trace* t);
PWB_API int pwb_trace_terminated(const pwb_trace* t);
PWB_API int pwb_trace_descends(const pwb_trace* t);
/* 1 when entry k's mirror ordinal is strictly below entry k-1's (k >= 1). */
PWB_API int pwb_trace_step_descends(const pwb_trace* t, size_t k);
/* Any output pointer may be null. *value is null when the value was too large. */
PWB_API pwb_status pwb_trace_entry(const pwb_trace* t, size_t k, uint64_t* step, char** base,
                                   char** value, char** rep, char** mirror);
/* d' for the step from hbr(m, base) read at z. *exact is null when too large. */
PWB_API pwb_status pwb_zdiff(const char* m, const char* base, const char* z, int* sign,
                             char** exact, int* borrow);
PWB_API pwb_status pwb_ordinal_compare(const char* m1, const char* m2, const char* base, int* out);

/* ---- Turing machines --------------------------------------------------------- */

typedef enum pwb_run_kind {
  PWB_RUN_HALTED = 0,
  PWB_RUN_SELF_TERMINATED,
  PWB_RUN_FUEL_EXHAUSTED
} pwb_run_kind;

typedef void (*pwb_step_fn)(uint64_t step, const char* description, void* user);

PWB_API pwb_status pwb_machine_parse(const char* text, pwb_machine** out);
PWB_API pwb_status pwb_machine_zoo(const char* name, pwb_machine** out);
PWB_API void pwb_machine_free(pwb_machine* m);
PWB_API pwb_status pwb_machine_format(const pwb_machine* m, char** out);

/* `on_step` may be null. */
PWB_API pwb_status pwb_tm_run(const pwb_machine* m, const char* input, uint64_t fuel, int oracle,
                              pwb_step_fn on_step, void* user, pwb_run** out);
PWB_API void pwb_run_free(pwb_run* r);
PWB_API pwb_run_kind pwb_run_get_kind(const pwb_run* r);
PWB_API const char* pwb_run_kind_name(pwb_run_kind kind);
PWB_API uint64_t pwb_run_steps(const pwb_run* r);
PWB_API uint64_t pwb_run_first(const pwb_run* r);
PWB_API uint64_t pwb_run_repeat(const pwb_run* r);
PWB_API int pwb_run_history_capped(const pwb_run* r);
PWB_API pwb_status pwb_run_description(const pwb_run* r, char** out);
PWB_API pwb_status pwb_run_tape(const pwb_run* r, char** out);
/* Certifies a SelfTerminated run by replaying its history. */
PWB_API pwb_status pwb_run_replay(const pwb_run* r, int* out);

#ifdef __cplusplus
}
#endif

#endif /* PWB_PWB_H */
