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

#include <cctype>
#include <charconv>
#include <sstream>

#include "pwb/error.hpp"
#include "pwb/proof.hpp"

namespace pwb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t text_line, const std::string& message) {
  throw Error(ErrorCode::ProofSyntax, "line " + std::to_string(text_line) + ": " + message);
}

std::size_t parse_index(std::string_view s, std::size_t text_line) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    fail(text_line, "expected a positive line number, got '" + std::string(s) + "'");
  }
  return value;
}

VarIndex parse_var(std::string_view s, std::size_t text_line) {
  s = trim(s);
  try {
    Term t = parse_term(s);
    if (t.kind() == Term::Kind::Var) return t.index();
  } catch (const Error&) {
  }
  fail(text_line, "expected a variable, got '" + std::string(s) + "'");
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Splits "k1=v1, k2=v2" at top-level commas.
std::vector<std::string_view> split_bindings(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (!trim(s.substr(start)).empty()) out.push_back(trim(s.substr(start)));
  return out;
}

Justification parse_justification(std::string_view s, std::size_t text_line) {
  s = trim(s);
  std::size_t name_end = 0;
  while (name_end < s.size() && std::isalnum(static_cast<unsigned char>(s[name_end]))) ++name_end;
  std::string_view name = s.substr(0, name_end);
  std::string_view rest = trim(s.substr(name_end));

  if (name == "HYP") {
    auto w = words(rest);
    if (w.size() != 1) fail(text_line, "HYP takes one hypothesis number");
    return HypothesisStep{parse_index(w[0], text_line) - 1};
  }
  if (name == "MP") {
    auto w = words(rest);
    if (w.size() != 2) fail(text_line, "MP takes two line numbers");
    return ModusPonens{parse_index(w[0], text_line) - 1, parse_index(w[1], text_line) - 1};
  }
  if (name == "GEN") {
    auto w = words(rest);
    if (w.size() != 2) fail(text_line, "GEN takes a line number and a variable");
    return Generalisation{parse_index(w[0], text_line) - 1, parse_var(w[1], text_line)};
  }

  auto axiom = axiom_from_name(name);
  if (!axiom) fail(text_line, "unknown justification '" + std::string(s) + "'");
  AxiomStep step{*axiom, {}};
  if (rest.empty()) return step;
  if (rest.front() != '(' || rest.back() != ')') {
    fail(text_line, "bindings must be written " + std::string(name) + "(key=value, ...)");
  }
  for (std::string_view binding : split_bindings(rest.substr(1, rest.size() - 2))) {
    std::size_t eq = binding.find('=');
    if (eq == std::string_view::npos) fail(text_line, "binding without '=': " + std::string(binding));
    std::string_view key = trim(binding.substr(0, eq));
    std::string_view value = trim(binding.substr(eq + 1));
    try {
      if (key == "x") {
        step.inst.x = parse_var(value, text_line);
      } else if (key == "t") {
        step.inst.t = parse_term(value);
      } else if (key == "B") {
        step.inst.b = parse_formula(value);
      } else if (key == "C") {
        step.inst.c = parse_formula(value);
      } else if (key == "D") {
        step.inst.d = parse_formula(value);
      } else if (key == "F") {
        step.inst.f = parse_formula(value);
      } else {
        fail(text_line, "unknown binding '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ProofSyntax) throw;
      fail(text_line, "binding " + std::string(key) + ": " + e.what());
    }
  }
  return step;
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  std::size_t text_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++text_line;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.substr(0, 4) == "hyp:") {
      if (!d.lines.empty()) fail(text_line, "hypotheses must precede the proof lines");
      try {
        d.hypotheses.push_back(parse_formula(line.substr(4)));
      } catch (const Error& e) {
        fail(text_line, e.what());
      }
      continue;
    }

    std::size_t dot = line.find('.');
    if (dot == std::string_view::npos) fail(text_line, "expected '<n>. <formula> ; <justification>'");
    std::size_t number = parse_index(line.substr(0, dot), text_line);
    if (number != d.lines.size() + 1) {
      fail(text_line, "expected line number " + std::to_string(d.lines.size() + 1));
    }
    std::string_view body = line.substr(dot + 1);
    std::size_t semi = body.rfind(';');
    if (semi == std::string_view::npos) fail(text_line, "missing ';' before the justification");
    Formula f;
    try {
      f = parse_formula(body.substr(0, semi));
    } catch (const Error& e) {
      fail(text_line, e.what());
    }
    d.lines.push_back({std::move(f), parse_justification(body.substr(semi + 1), text_line)});
  }
  if (d.lines.empty()) throw Error(ErrorCode::ProofSyntax, "no proof lines");
  return d;
}

std::string format_justification(const Justification& j) {
  std::ostringstream out;
  if (const auto* ax = std::get_if<AxiomStep>(&j)) {
    out << axiom_name(ax->axiom);
    std::vector<std::string> parts;
    const Instantiation& inst = ax->inst;
    if (inst.x) parts.push_back("x=x" + std::to_string(*inst.x));
    if (inst.b) parts.push_back("B=" + to_string(*inst.b));
    if (inst.c) parts.push_back("C=" + to_string(*inst.c));
    if (inst.d) parts.push_back("D=" + to_string(*inst.d));
    if (inst.f) parts.push_back("F=" + to_string(*inst.f));
    if (inst.t) parts.push_back("t=" + to_string(*inst.t));
    if (!parts.empty()) {
      out << '(';
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? ", " : "") << parts[i];
      out << ')';
    }
  } else if (const auto* h = std::get_if<HypothesisStep>(&j)) {
    out << "HYP " << h->index + 1;
  } else if (const auto* mp = std::get_if<ModusPonens>(&j)) {
    out << "MP " << mp->minor + 1 << ' ' << mp->major + 1;
  } else {
    const auto& g = std::get<Generalisation>(j);
    out << "GEN " << g.line + 1 << " x" << g.var;
  }
  return out.str();
}

std::string format_derivation(const Derivation& d) {
  std::ostringstream out;
  for (const Formula& h : d.hypotheses) out << "hyp: " << to_string(h) << '\n';
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    out << i + 1 << ". " << to_string(d.lines[i].formula) << " ; "
        << format_justification(d.lines[i].justification) << '\n';
  }
  return out.str();
}

}  // namespace pwb
