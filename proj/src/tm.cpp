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

#include "pwb/tm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "pwb/error.hpp"

namespace pwb {

namespace {

std::uint64_t key(StateId state, char symbol) {
  return (std::uint64_t{state} << 8) | static_cast<unsigned char>(symbol);
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidMachine, message);
}

char move_char(Move m) { return m == Move::Left ? 'L' : m == Move::Right ? 'R' : 'S'; }

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

char single_symbol(const std::string& word, std::size_t line) {
  if (word.size() != 1) {
    invalid("line " + std::to_string(line) + ": symbols are single characters, got '" + word + "'");
  }
  return word[0];
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states, std::string alphabet, char blank,
                             std::string_view start, const std::vector<std::string>& halting,
                             const std::vector<Rule>& rules)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), blank_(blank), rules_(rules) {
  if (states_.empty()) invalid("no states declared");
  if (std::unordered_set<std::string>(states_.begin(), states_.end()).size() != states_.size()) {
    invalid("duplicate state name");
  }
  if (alphabet_.find(blank_) == std::string::npos) invalid("blank symbol is not in the alphabet");
  auto state = [&](std::string_view name) {
    auto id = find_state(name);
    if (!id) invalid("undeclared state '" + std::string(name) + "'");
    return *id;
  };
  auto symbol = [&](char c) {
    if (alphabet_.find(c) == std::string::npos) {
      invalid(std::string("symbol '") + c + "' is not in the alphabet");
    }
    return c;
  };
  start_ = state(start);
  halting_.assign(states_.size(), false);
  for (const std::string& h : halting) halting_[state(h)] = true;
  for (const Rule& r : rules_) {
    StateId from = state(r.state);
    if (halting_[from]) invalid("rule leaves halting state '" + r.state + "'");
    Transition t{state(r.next), symbol(r.write), r.move};
    if (!table_.emplace(key(from, symbol(r.read)), t).second) {
      invalid("two rules for (" + r.state + ", " + r.read + ")");
    }
  }
}

std::optional<StateId> TuringMachine::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == name) return static_cast<StateId>(i);
  }
  return std::nullopt;
}

const Transition* TuringMachine::transition(StateId state, char symbol) const {
  auto it = table_.find(key(state, symbol));
  return it == table_.end() ? nullptr : &it->second;
}

std::string InstantaneousDescription::serialize() const {
  std::string out;
  out.reserve(16 + tape.size() * 9);
  auto put = [&out](auto v) { out.append(reinterpret_cast<const char*>(&v), sizeof(v)); };
  put(state);
  put(head);
  for (const auto& [pos, sym] : tape) {
    put(pos);
    out.push_back(sym);
  }
  return out;
}

ID initial_id(const TuringMachine& tm, std::string_view input) {
  ID id;
  id.state = tm.start();
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (tm.alphabet().find(input[i]) == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("input symbol '") + input[i] + "' is not in the alphabet");
    }
    if (input[i] != tm.blank()) id.tape[static_cast<std::int64_t>(i)] = input[i];
  }
  return id;
}

std::optional<ID> step(const TuringMachine& tm, const ID& id) {
  if (tm.is_halting(id.state)) return std::nullopt;
  auto cell = id.tape.find(id.head);
  const char read = cell == id.tape.end() ? tm.blank() : cell->second;
  const Transition* t = tm.transition(id.state, read);
  if (!t) return std::nullopt;
  ID next = id;
  if (t->write == tm.blank()) {
    next.tape.erase(id.head);
  } else {
    next.tape[id.head] = t->write;
  }
  next.state = t->next;
  if (t->move == Move::Left) --next.head;
  if (t->move == Move::Right) ++next.head;
  return next;
}

std::string tape_contents(const TuringMachine& tm, const ID& id) {
  if (id.tape.empty()) return "";
  std::string out;
  for (std::int64_t p = id.tape.begin()->first; p <= id.tape.rbegin()->first; ++p) {
    auto it = id.tape.find(p);
    out.push_back(it == id.tape.end() ? tm.blank() : it->second);
  }
  return out;
}

std::string format_id(const TuringMachine& tm, const ID& id) {
  std::int64_t lo = id.head, hi = id.head;
  if (!id.tape.empty()) {
    lo = std::min(lo, id.tape.begin()->first);
    hi = std::max(hi, id.tape.rbegin()->first);
  }
  std::string out = tm.state_name(id.state) + ":";
  for (std::int64_t p = lo; p <= hi; ++p) {
    auto it = id.tape.find(p);
    const char c = it == id.tape.end() ? tm.blank() : it->second;
    out += ' ';
    out += p == id.head ? std::string("[") + c + "]" : std::string(1, c);
  }
  return out;
}

const char* run_kind_name(RunResult::Kind kind) noexcept {
  switch (kind) {
    case RunResult::Kind::Halted: return "Halted";
    case RunResult::Kind::SelfTerminated: return "SelfTerminated";
    case RunResult::Kind::FuelExhausted: return "FuelExhausted";
  }
  return "Unknown";
}

RunResult run_with_oracle(const TuringMachine& tm, std::string_view input, const RunOptions& options) {
  if (options.fuel == 0) throw Error(ErrorCode::InvalidArgument, "fuel must be at least 1");
  RunResult result;
  ID current = initial_id(tm, input);
  std::unordered_map<std::string, std::uint64_t> seen;
  auto record = [&](std::uint64_t k) {
    if (options.observer) options.observer(k, current);
    if (options.keep_history) result.history.push_back(current);
  };
  record(0);
  if (options.oracle) seen.emplace(current.serialize(), 0);

  for (std::uint64_t k = 1; k <= options.fuel; ++k) {
    std::optional<ID> next = step(tm, current);
    if (!next) {
      result.kind = RunResult::Kind::Halted;
      result.steps = k - 1;
      result.id = std::move(current);
      return result;
    }
    current = std::move(*next);
    record(k);
    if (!options.oracle) continue;
    auto [it, fresh] = seen.emplace(current.serialize(), k);
    if (!fresh) {
      result.kind = RunResult::Kind::SelfTerminated;
      result.first = it->second;
      result.repeat = k;
      result.steps = k;
      result.id = std::move(current);
      return result;
    }
    if (seen.size() >= options.history_cap) {
      result.kind = RunResult::Kind::FuelExhausted;
      result.history_capped = true;
      result.steps = k;
      result.id = std::move(current);
      return result;
    }
  }
  // A machine that stops exactly as the fuel runs out has still halted.
  if (!step(tm, current)) {
    result.kind = RunResult::Kind::Halted;
  } else {
    result.kind = RunResult::Kind::FuelExhausted;
  }
  result.steps = options.fuel;
  result.id = std::move(current);
  return result;
}

bool replay_cycle(const TuringMachine& tm, const RunResult& result, std::span<const ID> history) {
  if (result.kind != RunResult::Kind::SelfTerminated) {
    throw Error(ErrorCode::InvalidArgument, "replay_cycle needs a SelfTerminated result");
  }
  if (result.first >= result.repeat || history.size() <= result.repeat) {
    throw Error(ErrorCode::HistoryMismatch, "history does not cover the reported cycle");
  }
  if (!(history[result.first] == history[result.repeat])) {
    throw Error(ErrorCode::HistoryMismatch, "recorded descriptions at the cycle ends differ");
  }
  ID id = history[result.first];
  for (std::uint64_t k = result.first + 1; k <= result.repeat; ++k) {
    std::optional<ID> next = step(tm, id);
    if (!next || !(*next == history[k])) {
      throw Error(ErrorCode::HistoryMismatch,
                  "replay diverges from the history at step " + std::to_string(k));
    }
    id = std::move(*next);
  }
  return id == history[result.first];
}

// --- text format ------------------------------------------------------------------

TuringMachine parse_machine(std::string_view text) {
  std::vector<std::string> states, halting;
  std::string alphabet, start;
  std::optional<char> blank;
  std::vector<TuringMachine::Rule> rules;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> w = split_words(raw);
    if (w.empty()) continue;
    const std::string& head = w[0];
    if (head.size() > 1 && head.back() == ':') {
      const std::string field = head.substr(0, head.size() - 1);
      std::vector<std::string> rest(w.begin() + 1, w.end());
      if (field == "states") {
        states.insert(states.end(), rest.begin(), rest.end());
      } else if (field == "alphabet") {
        for (const std::string& s : rest) alphabet.push_back(single_symbol(s, line));
      } else if (field == "blank") {
        if (rest.size() != 1) invalid("line " + std::to_string(line) + ": one blank symbol expected");
        blank = single_symbol(rest[0], line);
      } else if (field == "start") {
        if (rest.size() != 1) invalid("line " + std::to_string(line) + ": one start state expected");
        start = rest[0];
      } else if (field == "halt") {
        halting.insert(halting.end(), rest.begin(), rest.end());
      } else {
        invalid("line " + std::to_string(line) + ": unknown field '" + field + "'");
      }
      continue;
    }
    if (w.size() != 6 || w[2] != "->") {
      invalid("line " + std::to_string(line) + ": expected 'state symbol -> state symbol L|R|S'");
    }
    Move move;
    if (w[5] == "L") {
      move = Move::Left;
    } else if (w[5] == "R") {
      move = Move::Right;
    } else if (w[5] == "S") {
      move = Move::Stay;
    } else {
      invalid("line " + std::to_string(line) + ": move must be L, R or S");
    }
    rules.push_back({w[0], single_symbol(w[1], line), w[3], single_symbol(w[4], line), move});
  }
  if (!blank) invalid("missing 'blank:'");
  if (start.empty()) invalid("missing 'start:'");
  return TuringMachine(std::move(states), std::move(alphabet), *blank, start, halting, rules);
}

std::string format_machine(const TuringMachine& tm) {
  std::ostringstream out;
  out << "states:";
  for (std::size_t i = 0; i < tm.state_count(); ++i) out << ' ' << tm.state_name(static_cast<StateId>(i));
  out << "\nalphabet:";
  for (char c : tm.alphabet()) out << ' ' << c;
  out << "\nblank: " << tm.blank() << "\nstart: " << tm.state_name(tm.start()) << "\nhalt:";
  for (std::size_t i = 0; i < tm.state_count(); ++i) {
    if (tm.is_halting(static_cast<StateId>(i))) out << ' ' << tm.state_name(static_cast<StateId>(i));
  }
  out << '\n';
  for (const auto& r : tm.rules()) {
    out << r.state << ' ' << r.read << " -> " << r.next << ' ' << r.write << ' ' << move_char(r.move)
        << '\n';
  }
  return out.str();
}

// --- zoo --------------------------------------------------------------------------

namespace zoo {

TuringMachine stay_put() {
  return parse_machine(
      "states: q\nalphabet: _\nblank: _\nstart: q\n"
      "q _ -> q _ S\n");
}

TuringMachine right_forever() {
  return parse_machine(
      "states: q\nalphabet: _\nblank: _\nstart: q\n"
      "q _ -> q _ R\n");
}

TuringMachine unary_successor() {
  return parse_machine(
      "states: scan done\nalphabet: _ 1\nblank: _\nstart: scan\nhalt: done\n"
      "scan 1 -> scan 1 R\n"
      "scan _ -> done 1 S\n");
}

TuringMachine unary_copy() {
  return parse_machine(
      "states: mark right append back left restore done\n"
      "alphabet: _ 1 x\nblank: _\nstart: mark\nhalt: done\n"
      "mark 1 -> right x R\n"
      "mark _ -> restore _ L\n"
      "right 1 -> right 1 R\n"
      "right _ -> append _ R\n"
      "append 1 -> append 1 R\n"
      "append _ -> back 1 L\n"
      "back 1 -> back 1 L\n"
      "back _ -> left _ L\n"
      "left 1 -> left 1 L\n"
      "left x -> mark x R\n"
      "restore x -> restore 1 L\n"
      "restore _ -> done _ R\n");
}

TuringMachine ping_pong() {
  return parse_machine(
      "states: A B\nalphabet: _\nblank: _\nstart: A\n"
      "A _ -> B _ S\n"
      "B _ -> A _ S\n");
}

TuringMachine busy_beaver2() {
  return parse_machine(
      "states: A B H\nalphabet: _ 1\nblank: _\nstart: A\nhalt: H\n"
      "A _ -> B 1 R\n"
      "A 1 -> B 1 L\n"
      "B _ -> A 1 L\n"
      "B 1 -> H 1 R\n");
}

TuringMachine bouncing() {
  return parse_machine(
      "states: A B C\nalphabet: _ 1\nblank: _\nstart: A\n"
      "A _ -> B 1 R\n"
      "B _ -> C _ L\n"
      "C 1 -> B 1 R\n");
}

std::vector<std::pair<std::string, TuringMachine>> all() {
  std::vector<std::pair<std::string, TuringMachine>> out;
  out.emplace_back("stay_put", stay_put());
  out.emplace_back("right_forever", right_forever());
  out.emplace_back("unary_successor", unary_successor());
  out.emplace_back("unary_copy", unary_copy());
  out.emplace_back("ping_pong", ping_pong());
  out.emplace_back("busy_beaver2", busy_beaver2());
  out.emplace_back("bouncing", bouncing());
  return out;
}

}  // namespace zoo

}  // namespace pwb
