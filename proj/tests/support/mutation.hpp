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

// Index-mutation testing of the proof checker against a text-level
// re-verification of single Modus Ponens and Generalisation steps.

#include <string>
#include <vector>

#include "pwb/proof.hpp"

namespace pwb::testing {

// Decides whether line `k` (an MP or Gen line) follows from the lines it
// cites, comparing printed formulas only. Hypotheses must be closed, which
// makes the Generalisation side condition vacuous.
bool step_valid_by_text(const Derivation& d, std::size_t k);

struct MutationReport {
  std::size_t mutants = 0;
  std::size_t rejected = 0;
  std::size_t still_valid = 0;
  std::vector<std::string> disagreements;
};

// For an accepted derivation, rewrites every MP/Gen line reference to every
// other earlier line and checks each mutant against step_valid_by_text.
MutationReport mutate_references(const Derivation& d);

}  // namespace pwb::testing
