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

// pwb: command-line front end over the C API.
//
// Exit codes: 0 success / accepted / true, 1 rejected / false / invalid
// input, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwb/pwb.h"

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

enum class Format { Human, Json, Csv };

struct Failure {
  int exit_code;
  std::string message;
};

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  LibString() = default;
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  ~LibString() { pwb_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
  bool null() const { return p == nullptr; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~Handle() { Free(p); }
  T** out() { return &p; }
};

using FormulaHandle = Handle<pwb_formula, pwb_formula_free>;
using DerivationHandle = Handle<pwb_derivation, pwb_derivation_free>;
using CorpusHandle = Handle<pwb_corpus, pwb_corpus_free>;
using TraceHandle = Handle<pwb_trace, pwb_trace_free>;
using MachineHandle = Handle<pwb_machine, pwb_machine_free>;
using RunHandle = Handle<pwb_run, pwb_run_free>;

void ok(pwb_status s, const std::string& context) {
  if (s == PWB_OK) return;
  std::string msg = context + ": " + pwb_status_name(s);
  std::string detail = pwb_last_error();
  if (!detail.empty()) msg += ": " + detail;
  throw Failure{kNo, msg};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kNo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FormulaHandle parse_formula(const std::string& text) {
  FormulaHandle f;
  size_t position = 0;
  pwb_status s = pwb_formula_parse(text.c_str(), f.out(), &position);
  if (s != PWB_OK) throw Failure{kNo, std::string(pwb_status_name(s)) + ": " + pwb_last_error()};
  return f;
}

DerivationHandle load_derivation(const std::string& path) {
  DerivationHandle d;
  ok(pwb_derivation_parse(read_file(path).c_str(), d.out()), path);
  return d;
}

std::string formula_text(const pwb_formula* f) {
  LibString s;
  ok(pwb_formula_print(f, s.out()), "print");
  return s.str();
}

void emit_json(const json& j) { std::cout << j.dump() << '\n'; }

void add_format(CLI::App* cmd, Format& format, bool with_csv) {
  static const std::map<std::string, Format> names{
      {"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  std::map<std::string, Format> allowed = names;
  if (!with_csv) allowed.erase("csv");
  cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(allowed));
  cmd->add_flag_callback("--json", [&format] { format = Format::Json; }, "Same as --format json");
  if (with_csv) {
    cmd->add_flag_callback("--csv", [&format] { format = Format::Csv; }, "Same as --format csv");
  }
}

json verdict_json(const pwb_verdict& v) {
  json j{{"kind", pwb_verdict_kind_name(v.kind)}};
  if (v.kind == PWB_VERDICT_FALSE_AT || v.kind == PWB_VERDICT_WITNESS_AT) {
    j["witness"] = v.witness;
    if (v.tuple) j["tuple"] = v.tuple;
  }
  if (v.kind == PWB_VERDICT_VERIFIED_UP_TO || v.kind == PWB_VERDICT_NO_WITNESS_UP_TO) {
    j["bound"] = v.bound;
  }
  return j;
}

std::string verdict_text(const pwb_verdict& v) {
  std::string s = pwb_verdict_kind_name(v.kind);
  if (v.kind == PWB_VERDICT_FALSE_AT || v.kind == PWB_VERDICT_WITNESS_AT) {
    s += "(" + std::to_string(v.witness) + ")";
    if (v.tuple) s += std::string(" [") + v.tuple + "]";
  }
  if (v.kind == PWB_VERDICT_VERIFIED_UP_TO || v.kind == PWB_VERDICT_NO_WITNESS_UP_TO) {
    s += "(" + std::to_string(v.bound) + ")";
  }
  return s;
}

// --- subcommands ----------------------------------------------------------------

int cmd_parse(const std::string& text, bool ast, Format format) {
  FormulaHandle f = parse_formula(text);
  LibString tree, vars;
  ok(pwb_formula_ast(f.p, tree.out()), "parse");
  ok(pwb_formula_free_vars(f.p, vars.out()), "parse");
  if (format == Format::Json) {
    json free = json::array();
    std::stringstream ss(vars.str());
    for (std::string item; std::getline(ss, item, ',');) free.push_back(std::stoul(item));
    emit_json({{"canonical", formula_text(f.p)}, {"ast", tree.str()}, {"free_vars", free}});
  } else {
    std::cout << formula_text(f.p) << '\n';
    if (ast) std::cout << tree.str() << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, Format format) {
  DerivationHandle d = load_derivation(path);
  pwb_check_report r{};
  LibString detail;
  ok(pwb_derivation_check(d.p, &r, detail.out()), "check");
  const size_t hyps = pwb_derivation_hypotheses(d.p);
  if (format == Format::Json) {
    json j{{"accepted", r.accepted != 0}, {"is_proof", r.is_proof != 0},
           {"lines", pwb_derivation_length(d.p)}, {"hypotheses", hyps}};
    if (!r.accepted) {
      j["line"] = r.line;
      j["reason"] = r.reason;
      j["detail"] = detail.str();
    }
    emit_json(j);
  } else if (r.accepted) {
    if (r.is_proof) {
      std::cout << "Accepted (proof)\n";
    } else {
      std::cout << "Accepted (derivation from " << hyps << " hypothes" << (hyps == 1 ? "is" : "es")
                << ")\n";
    }
  } else {
    std::cout << "Rejected at line " << r.line << ": " << r.reason;
    if (!detail.str().empty()) std::cout << " (" << detail.str() << ")";
    std::cout << '\n';
  }
  return r.accepted ? kOk : kNo;
}

int cmd_deduce(const std::string& path) {
  DerivationHandle d = load_derivation(path);
  DerivationHandle out;
  ok(pwb_derivation_deduce(d.p, out.out()), "deduce");
  LibString text;
  ok(pwb_derivation_format(out.p, text.out()), "deduce");
  std::cout << text.str();
  return kOk;
}

int cmd_omega(const std::vector<std::string>& paths, uint64_t bound, Format format) {
  std::vector<DerivationHandle> proofs;
  std::vector<const pwb_derivation*> raw;
  for (const auto& p : paths) {
    proofs.push_back(load_derivation(p));
    raw.push_back(proofs.back().p);
  }
  LibString hits;
  ok(pwb_omega_scan(raw.data(), raw.size(), bound, hits.out()), "omega");
  std::vector<std::string> lines;
  std::stringstream ss(hits.str());
  for (std::string line; std::getline(ss, line);) lines.push_back(line.substr(0, line.find('\t')));
  if (format == Format::Json) {
    emit_json({{"bound", bound}, {"hits", lines}});
  } else {
    for (const auto& l : lines) std::cout << l << '\n';
    if (lines.empty()) std::cout << "no evidence up to " << bound << '\n';
  }
  return kOk;
}

int cmd_godel_encode(const std::string& text, bool term, const std::string& proof, Format format) {
  LibString code;
  std::string what;
  if (!proof.empty()) {
    DerivationHandle d = load_derivation(proof);
    ok(pwb_godel_encode_proof(d.p, code.out()), "encode");
    what = "proof";
  } else if (term) {
    ok(pwb_godel_encode_term(text.c_str(), code.out()), "encode");
    what = "term";
  } else {
    FormulaHandle f = parse_formula(text);
    ok(pwb_godel_encode_formula(f.p, code.out()), "encode");
    what = "formula";
  }
  if (format == Format::Json) {
    emit_json({{"kind", what}, {"code", code.str()}});
  } else {
    std::cout << code.str() << '\n';
  }
  return kOk;
}

int cmd_godel_decode(const std::string& code, bool term, Format format) {
  std::string text;
  if (term) {
    LibString t;
    ok(pwb_godel_decode_term(code.c_str(), t.out()), "decode");
    text = t.str();
  } else {
    FormulaHandle f;
    ok(pwb_godel_decode_formula(code.c_str(), f.out()), "decode");
    text = formula_text(f.p);
  }
  if (format == Format::Json) {
    emit_json({{"text", text}});
  } else {
    std::cout << text << '\n';
  }
  return kOk;
}

int cmd_godel_proofpair(std::string x, std::string y, const std::string& proof,
                        const std::string& formula, Format format) {
  if (!proof.empty()) {
    DerivationHandle d = load_derivation(proof);
    LibString code;
    ok(pwb_godel_encode_proof(d.p, code.out()), "proofpair");
    x = code.str();
  }
  if (!formula.empty()) {
    FormulaHandle f = parse_formula(formula);
    LibString code;
    ok(pwb_godel_encode_formula(f.p, code.out()), "proofpair");
    y = code.str();
  }
  if (x.empty() || y.empty()) throw Failure{kUsage, "proofpair needs both x and y"};
  int result = 0;
  ok(pwb_godel_proof_pair(x.c_str(), y.c_str(), &result), "proofpair");
  if (format == Format::Json) {
    emit_json({{"proof_pair", result != 0}});
  } else {
    std::cout << (result ? "true" : "false") << '\n';
  }
  return result ? kOk : kNo;
}

int cmd_beta_encode(const std::vector<std::string>& values, Format format) {
  std::vector<const char*> raw;
  for (const auto& v : values) raw.push_back(v.c_str());
  LibString b, c;
  ok(pwb_beta_encode(raw.data(), raw.size(), b.out(), c.out()), "beta");
  std::vector<std::string> decoded;
  for (size_t i = 0; i < values.size(); ++i) {
    LibString r;
    ok(pwb_beta_eval(b.str().c_str(), c.str().c_str(), std::to_string(i).c_str(), r.out()), "beta");
    decoded.push_back(r.str());
  }
  const bool round_trip = decoded == values;
  if (format == Format::Json) {
    emit_json({{"b", b.str()}, {"c", c.str()}, {"decoded", decoded}, {"round_trip", round_trip}});
  } else {
    std::cout << "b = " << b.str() << "\nc = " << c.str() << '\n';
    for (size_t i = 0; i < decoded.size(); ++i) {
      std::cout << "beta(b, c, " << i << ") = " << decoded[i] << '\n';
    }
  }
  return round_trip ? kOk : kNo;
}

int cmd_beta_eval(const std::string& b, const std::string& c, const std::string& i, Format format) {
  LibString r;
  ok(pwb_beta_eval(b.c_str(), c.c_str(), i.c_str(), r.out()), "beta");
  if (format == Format::Json) {
    emit_json({{"value", r.str()}});
  } else {
    std::cout << r.str() << '\n';
  }
  return kOk;
}

int cmd_eval(const std::string& text, const std::string& mode, uint64_t bound, uint64_t budget,
             const std::string& assign, const std::vector<std::string>& corpus_files,
             Format format) {
  FormulaHandle f = parse_formula(text);
  if (mode == "qf" || mode == "tarski") {
    int result = 0;
    if (mode == "qf") {
      ok(pwb_eval_qf(f.p, assign.c_str(), &result), "eval");
    } else {
      ok(pwb_eval_tarski(f.p, bound, assign.c_str(), &result), "eval");
    }
    if (format == Format::Json) {
      json j{{"kind", result ? "True" : "False"}};
      if (mode == "tarski") j["bound"] = bound;
      emit_json(j);
    } else {
      std::cout << (result ? "True" : "False") << '\n';
    }
    return result ? kOk : kNo;
  }
  pwb_verdict v{};
  if (mode == "algo") {
    ok(pwb_eval_algorithmic(f.p, budget, assign.c_str(), &v), "eval");
  } else {
    CorpusHandle corpus;
    ok(pwb_corpus_new(corpus.out()), "eval");
    for (const auto& path : corpus_files) {
      DerivationHandle d = load_derivation(path);
      ok(pwb_corpus_add(corpus.p, d.p), path);
    }
    ok(pwb_eval_godelian(f.p, corpus.p, budget, &v), "eval");
  }
  if (format == Format::Json) {
    emit_json(verdict_json(v));
  } else {
    std::cout << verdict_text(v) << '\n';
  }
  const bool falsified = v.kind == PWB_VERDICT_FALSE || v.kind == PWB_VERDICT_FALSE_AT;
  pwb_verdict_clear(&v);
  return falsified ? kNo : kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_goodstein_run(const std::string& m, uint64_t max_steps, size_t value_bits, bool show_rep,
                      Format format) {
  TraceHandle t;
  ok(pwb_goodstein_run(m.c_str(), max_steps, value_bits, t.out()), "goodstein");
  const size_t n = pwb_trace_length(t.p);
  const bool terminated = pwb_trace_terminated(t.p);
  const bool descends = pwb_trace_descends(t.p);
  json rows = json::array();
  if (format == Format::Csv) std::cout << "step,base,value,ordinal,descends" << (show_rep ? ",rep" : "") << '\n';
  for (size_t k = 0; k < n; ++k) {
    uint64_t step = 0;
    LibString base, value, rep, mirror;
    ok(pwb_trace_entry(t.p, k, &step, base.out(), value.out(), rep.out(), mirror.out()), "goodstein");
    const std::string down = k == 0 ? "" : pwb_trace_step_descends(t.p, k) ? "1" : "0";
    if (format == Format::Json) {
      json row{{"step", step}, {"base", base.str()}, {"ordinal", mirror.str()}};
      row["value"] = value.null() ? json(nullptr) : json(value.str());
      if (k > 0) row["descends"] = down == "1";
      if (show_rep) row["rep"] = rep.str();
      rows.push_back(row);
    } else if (format == Format::Csv) {
      std::cout << step << ',' << base.str() << ',' << value.str() << ',' << csv_field(mirror.str())
                << ',' << down;
      if (show_rep) std::cout << ',' << csv_field(rep.str());
      std::cout << '\n';
    } else {
      std::cout << "n=" << step << " base=" << base.str() << " value="
                << (value.null() ? std::string("(too large)") : value.str()) << " ordinal=" << mirror.str();
      if (show_rep) std::cout << " rep=" << rep.str();
      std::cout << '\n';
    }
  }
  if (format == Format::Json) {
    emit_json({{"start", m}, {"entries", rows}, {"terminated", terminated}, {"descent", descends}});
  } else if (format == Format::Human) {
    if (terminated) {
      std::cout << "terminated after " << n - 1 << " steps\n";
    } else {
      std::cout << "not terminated at step " << n - 1 << '\n';
    }
    std::cout << "descent: " << (descends ? "strict" : "VIOLATED") << '\n';
  }
  return descends ? kOk : kNo;
}

int cmd_goodstein_zdiff(const std::string& m, const std::string& base, const std::string& z,
                        Format format) {
  int sign = 0, borrow = 0;
  LibString exact;
  ok(pwb_zdiff(m.c_str(), base.c_str(), z.c_str(), &sign, exact.out(), &borrow), "zdiff");
  const char* branch = borrow ? "borrow" : "decrement";
  if (format == Format::Json) {
    json j{{"sign", sign}, {"branch", branch}};
    j["exact"] = exact.null() ? json(nullptr) : json(exact.str());
    emit_json(j);
  } else {
    std::cout << "d' " << (exact.null() ? std::string(sign > 0 ? "> 0" : sign < 0 ? "< 0" : "= 0")
                                         : "= " + exact.str())
              << " (" << branch << " branch)\n";
  }
  return sign > 0 ? kOk : kNo;
}

int cmd_goodstein_hbr(const std::string& m, const std::string& base, Format format) {
  LibString rep, mirror;
  ok(pwb_hbr(m.c_str(), base.c_str(), rep.out(), mirror.out()), "hbr");
  if (format == Format::Json) {
    emit_json({{"rep", rep.str()}, {"ordinal", mirror.str()}});
  } else {
    std::cout << rep.str() << '\n' << mirror.str() << '\n';
  }
  return kOk;
}

void print_step(uint64_t step, const char* description, void*) {
  std::cout << step << ": " << description << '\n';
}

int cmd_tm_run(const std::string& path, const std::string& zoo_name, const std::string& input,
               uint64_t fuel, bool trace, bool no_oracle, Format format) {
  MachineHandle m;
  if (!zoo_name.empty()) {
    ok(pwb_machine_zoo(zoo_name.c_str(), m.out()), "zoo");
  } else if (!path.empty()) {
    ok(pwb_machine_parse(read_file(path).c_str(), m.out()), path);
  } else {
    throw Failure{kUsage, "tm run needs a machine file or --zoo NAME"};
  }
  RunHandle r;
  const bool human_trace = trace && format == Format::Human;
  ok(pwb_tm_run(m.p, input.c_str(), fuel, !no_oracle, human_trace ? print_step : nullptr, nullptr,
                r.out()),
     "tm");
  const pwb_run_kind kind = pwb_run_get_kind(r.p);
  LibString description, tape;
  ok(pwb_run_description(r.p, description.out()), "tm");
  ok(pwb_run_tape(r.p, tape.out()), "tm");
  int replayed = -1;
  if (kind == PWB_RUN_SELF_TERMINATED) ok(pwb_run_replay(r.p, &replayed), "replay");

  if (format == Format::Json) {
    json j{{"kind", pwb_run_kind_name(kind)}, {"id", description.str()}, {"tape", tape.str()}};
    if (kind == PWB_RUN_SELF_TERMINATED) {
      j["first"] = pwb_run_first(r.p);
      j["repeat"] = pwb_run_repeat(r.p);
      j["replay_verified"] = replayed == 1;
    } else {
      j["steps"] = pwb_run_steps(r.p);
    }
    if (kind == PWB_RUN_FUEL_EXHAUSTED) j["history_capped"] = pwb_run_history_capped(r.p) != 0;
    emit_json(j);
  } else {
    std::cout << pwb_run_kind_name(kind);
    if (kind == PWB_RUN_SELF_TERMINATED) {
      std::cout << ' ' << pwb_run_first(r.p) << ' ' << pwb_run_repeat(r.p);
    } else {
      std::cout << ' ' << pwb_run_steps(r.p);
    }
    std::cout << '\n' << "id: " << description.str() << '\n' << "tape: " << tape.str() << '\n';
    if (kind == PWB_RUN_SELF_TERMINATED) std::cout << "replay: verified\n";
    if (pwb_run_history_capped(r.p)) std::cout << "history cap reached\n";
  }
  return kind == PWB_RUN_FUEL_EXHAUSTED ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for first-order Peano Arithmetic"};
  app.require_subcommand(1);
  Format format = Format::Human;
  std::function<int()> action;

  // parse / print
  std::string formula;
  bool show_ast = false;
  auto* parse = app.add_subcommand("parse", "Parse a formula and show its canonical form");
  parse->add_option("formula", formula, "Formula text")->required();
  parse->add_flag("--ast", show_ast, "Also print the syntax tree");
  add_format(parse, format, false);
  parse->callback([&] { action = [&] { return cmd_parse(formula, show_ast, format); }; });

  auto* print = app.add_subcommand("print", "Print the canonical form of a formula");
  print->add_option("formula", formula, "Formula text")->required();
  print->callback([&] {
    action = [&] {
      FormulaHandle f = parse_formula(formula);
      std::cout << formula_text(f.p) << '\n';
      return kOk;
    };
  });

  // proofs
  std::string file;
  auto* check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("file", file, "Derivation file ('-' for stdin)")->required();
  add_format(check, format, false);
  check->callback([&] { action = [&] { return cmd_check(file, format); }; });

  auto* deduce = app.add_subcommand("deduce", "Discharge the last hypothesis of a derivation");
  deduce->add_option("file", file, "Derivation file")->required();
  deduce->callback([&] { action = [&] { return cmd_deduce(file); }; });

  std::vector<std::string> files;
  uint64_t bound = 10;
  auto* omega = app.add_subcommand("omega", "Scan proofs for ~forall x F with F(0..bound) proved");
  omega->add_option("files", files, "Proof files")->required();
  omega->add_option("--bound", bound, "Largest numeral checked")->check(CLI::NonNegativeNumber);
  add_format(omega, format, false);
  omega->callback([&] { action = [&] { return cmd_omega(files, bound, format); }; });

  // Goedel coding
  auto* godel = app.add_subcommand("godel", "Goedel numbering and the beta function");
  godel->require_subcommand(1);
  bool as_term = false;
  std::string proof_file, code, x, y;
  auto* encode = godel->add_subcommand("encode", "Code of a formula, term or proof");
  encode->add_option("text", formula, "Formula (or term with --term)");
  encode->add_flag("--term", as_term, "Treat the text as a term");
  encode->add_option("--proof", proof_file, "Encode the formula sequence of a proof file");
  add_format(encode, format, false);
  encode->callback([&] {
    if (formula.empty() && proof_file.empty()) throw CLI::ValidationError("encode", "give a formula or --proof");
    action = [&] { return cmd_godel_encode(formula, as_term, proof_file, format); };
  });
  auto* decode = godel->add_subcommand("decode", "Formula (or term) with the given code");
  decode->add_option("code", code, "Decimal or 2^a*3^b*... code")->required();
  decode->add_flag("--term", as_term, "Decode as a term");
  add_format(decode, format, false);
  decode->callback([&] { action = [&] { return cmd_godel_decode(code, as_term, format); }; });
  auto* pp = godel->add_subcommand("proofpair", "Is x the code of a proof of the formula coded by y?");
  pp->add_option("x", x, "Proof code");
  pp->add_option("y", y, "Formula code");
  pp->add_option("--proof", proof_file, "Take x from a proof file");
  pp->add_option("--formula", formula, "Take y from a formula");
  add_format(pp, format, false);
  pp->callback([&] { action = [&] { return cmd_godel_proofpair(x, y, proof_file, formula, format); }; });

  auto* beta = godel->add_subcommand("beta", "Beta-function sequence coding");
  beta->require_subcommand(1);
  std::vector<std::string> values;
  auto* beta_enc = beta->add_subcommand("encode", "Find (b, c) coding a sequence");
  beta_enc->add_option("values", values, "Sequence of naturals")->required();
  add_format(beta_enc, format, false);
  beta_enc->callback([&] { action = [&] { return cmd_beta_encode(values, format); }; });
  std::string b, c, i;
  auto* beta_ev = beta->add_subcommand("eval", "beta(b, c, i) = b mod (1 + (i+1)c)");
  beta_ev->add_option("b", b, "First number of the pair")->required();
  beta_ev->add_option("c", c, "Second number of the pair")->required();
  beta_ev->add_option("i", i, "Index into the sequence")->required();
  add_format(beta_ev, format, false);
  beta_ev->callback([&] { action = [&] { return cmd_beta_eval(b, c, i, format); }; });

  // evaluation
  std::string mode = "algo", assign;
  uint64_t budget = 1000;
  std::vector<std::string> corpus;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula over the naturals");
  eval->add_option("formula", formula, "Formula text")->required();
  eval->add_option("--mode", mode, "qf | tarski | algo | godel")
      ->check(CLI::IsMember({"qf", "tarski", "algo", "godel"}));
  eval->add_option("--bound", bound, "Domain bound for tarski mode")->check(CLI::NonNegativeNumber);
  eval->add_option("--budget", budget, "Search budget for algo and godel modes")
      ->check(CLI::PositiveNumber);
  eval->add_option("--assign", assign, "Variable values, e.g. x1=4,x2=7");
  eval->add_option("--corpus", corpus, "Proof files forming the theorem corpus (godel mode)");
  add_format(eval, format, false);
  eval->callback([&] {
    action = [&] { return cmd_eval(formula, mode, bound, budget, assign, corpus, format); };
  });

  // Goodstein
  auto* gs = app.add_subcommand("goodstein", "Goodstein sequences and hereditary notation");
  gs->require_subcommand(1);
  std::string m, base = "2", z;
  uint64_t max_steps = 100;
  size_t value_bits = 1 << 16;
  bool show_rep = false;
  auto* run = gs->add_subcommand("run", "Compute a Goodstein sequence");
  run->add_option("m", m, "Starting value")->required();
  run->add_option("--max-steps", max_steps, "Number of steps")->check(CLI::PositiveNumber);
  run->add_option("--value-bits", value_bits, "Omit values larger than this many bits");
  run->add_flag("--rep", show_rep, "Include hereditary representations");
  add_format(run, format, true);
  run->callback([&] { action = [&] { return cmd_goodstein_run(m, max_steps, value_bits, show_rep, format); }; });
  auto* zdiff = gs->add_subcommand("zdiff", "d' = m(z) - step(m)(z) with the base replaced by z");
  zdiff->add_option("m", m, "Value whose representation is stepped")->required();
  zdiff->add_option("--z", z, "Substituted base, larger than --base")->required();
  zdiff->add_option("--base", base, "Base of the representation");
  add_format(zdiff, format, false);
  zdiff->callback([&] { action = [&] { return cmd_goodstein_zdiff(m, base, z, format); }; });
  auto* hbr = gs->add_subcommand("hbr", "Hereditary representation and its ordinal");
  hbr->add_option("m", m, "Value")->required();
  hbr->add_option("--base", base, "Base");
  add_format(hbr, format, false);
  hbr->callback([&] { action = [&] { return cmd_goodstein_hbr(m, base, format); }; });

  // Turing machines
  auto* tm = app.add_subcommand("tm", "Turing machines with the looping oracle");
  tm->require_subcommand(1);
  std::string input, zoo;
  uint64_t fuel = 10000;
  bool trace = false, no_oracle = false;
  auto* tm_run = tm->add_subcommand("run", "Run a machine");
  tm_run->add_option("file", file, "Machine file");
  tm_run->add_option("--zoo", zoo, "Built-in machine instead of a file");
  tm_run->add_option("--input", input, "Initial tape from cell 0");
  tm_run->add_option("--fuel", fuel, "Maximum number of steps")->check(CLI::PositiveNumber);
  tm_run->add_flag("--trace", trace, "Print every description");
  tm_run->add_flag("--no-oracle", no_oracle, "Disable loop detection");
  add_format(tm_run, format, false);
  tm_run->callback([&] {
    action = [&] { return cmd_tm_run(file, zoo, input, fuel, trace, no_oracle, format); };
  });

  auto* tm_show = tm->add_subcommand("show", "Print a machine in file format");
  tm_show->add_option("file", file, "Machine file");
  tm_show->add_option("--zoo", zoo, "Built-in machine instead of a file");
  tm_show->callback([&] {
    action = [&] {
      MachineHandle mh;
      if (!zoo.empty()) {
        ok(pwb_machine_zoo(zoo.c_str(), mh.out()), "zoo");
      } else if (!file.empty()) {
        ok(pwb_machine_parse(read_file(file).c_str(), mh.out()), file);
      } else {
        throw Failure{kUsage, "tm show needs a machine file or --zoo NAME"};
      }
      LibString text;
      ok(pwb_machine_format(mh.p, text.out()), "tm");
      std::cout << text.str();
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "pwb: " << f.message << '\n';
    return f.exit_code;
  }
}
