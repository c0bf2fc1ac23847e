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

// Deterministic single-tape Turing machines with a looping oracle that
// records every instantaneous description and stops when one recurs.
//
// Symbols are single characters. An undefined transition halts the machine,
// as does entering a halting state. Two descriptions are equal only if the
// state, the head position and the non-blank tape all agree, so a machine
// that walks off forever over blanks is never reported as looping.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pwb {

using StateId = std::uint32_t;

enum class Move : std::uint8_t { Left, Right, Stay };

struct Transition {
  StateId next;
  char write;
  Move move;
};

class TuringMachine {
 public:
  struct Rule {
    std::string state;
    char read;
    std::string next;
    char write;
    Move move;
  };

  // Throws Error(InvalidMachine) on undeclared states or symbols, duplicate
  // rules, a blank outside the alphabet, or a rule leaving a halting state.
  TuringMachine(std::vector<std::string> states, std::string alphabet, char blank,
                std::string_view start, const std::vector<std::string>& halting,
                const std::vector<Rule>& rules);

  std::size_t state_count() const noexcept { return states_.size(); }
  const std::string& state_name(StateId id) const { return states_.at(id); }
  std::optional<StateId> find_state(std::string_view name) const;
  const std::string& alphabet() const noexcept { return alphabet_; }
  char blank() const noexcept { return blank_; }
  StateId start() const noexcept { return start_; }
  bool is_halting(StateId id) const { return halting_.at(id); }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  const Transition* transition(StateId state, char symbol) const;

 private:
  std::vector<std::string> states_;
  std::string alphabet_;
  char blank_;
  StateId start_ = 0;
  std::vector<bool> halting_;
  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, Transition> table_;
};

struct InstantaneousDescription {
  StateId state = 0;
  std::int64_t head = 0;
  std::map<std::int64_t, char> tape;  // non-blank cells only

  // Canonical byte string; equal descriptions serialise identically.
  std::string serialize() const;

  friend bool operator==(const InstantaneousDescription&, const InstantaneousDescription&) = default;
};

using ID = InstantaneousDescription;

// The start description with `input` written from cell 0. Throws
// Error(InvalidArgument) on symbols outside the alphabet.
ID initial_id(const TuringMachine& tm, std::string_view input);

// The successor description, or nullopt when the machine halts.
std::optional<ID> step(const TuringMachine& tm, const ID& id);

// Non-blank tape contents from the leftmost to the rightmost non-blank cell.
std::string tape_contents(const TuringMachine& tm, const ID& id);
// "state: 1 1 [_]" with the head cell bracketed.
std::string format_id(const TuringMachine& tm, const ID& id);

struct RunResult {
  enum class Kind : std::uint8_t { Halted, SelfTerminated, FuelExhausted };

  Kind kind;
  // Halted: the final description; FuelExhausted: the last one reached;
  // SelfTerminated: the repeated one.
  ID id;
  // Halted: transitions executed; FuelExhausted: steps taken before stopping.
  std::uint64_t steps = 0;
  // SelfTerminated: history[first] == history[repeat], first < repeat.
  std::uint64_t first = 0;
  std::uint64_t repeat = 0;
  // FuelExhausted because the history reached its cap, not the fuel limit.
  bool history_capped = false;
  // history[k] is the description after k steps (when kept).
  std::vector<ID> history;
};

const char* run_kind_name(RunResult::Kind kind) noexcept;

struct RunOptions {
  std::uint64_t fuel = 10000;
  bool oracle = true;
  std::size_t history_cap = std::size_t{1} << 22;
  bool keep_history = true;
  // Called with (step, description) for every description visited.
  std::function<void(std::uint64_t, const ID&)> observer{};
};

// Runs from initial_id(tm, input). Throws Error(InvalidArgument) when fuel is 0.
RunResult run_with_oracle(const TuringMachine& tm, std::string_view input,
                          const RunOptions& options = {});

// Re-executes the recorded history and confirms that it really returns to
// history[first] at step `repeat`. Throws Error(HistoryMismatch) when the
// history does not match the machine, Error(InvalidArgument) when `result`
// is not SelfTerminated.
bool replay_cycle(const TuringMachine& tm, const RunResult& result, std::span<const ID> history);

// Machine text format:
//   states: q0 q1 done
//   alphabet: _ 1
//   blank: _
//   start: q0
//   halt: done
//   q0 1 -> q0 1 R
// '#' starts a comment. Throws Error(InvalidMachine).
TuringMachine parse_machine(std::string_view text);
std::string format_machine(const TuringMachine& tm);

// Small machines used by tests and shipped as samples.
namespace zoo {
TuringMachine stay_put();        // rewrites the blank in place forever
TuringMachine right_forever();   // walks right over blanks
TuringMachine unary_successor(); // 1^n -> 1^(n+1)
TuringMachine unary_copy();      // 1^n -> 1^n _ 1^n
TuringMachine ping_pong();       // two states swapping on one cell
TuringMachine busy_beaver2();    // 2-state champion: 6 steps, four 1s
TuringMachine bouncing();        // writes a 1, then bounces between two cells
std::vector<std::pair<std::string, TuringMachine>> all();
}  // namespace zoo

}  // namespace pwb
