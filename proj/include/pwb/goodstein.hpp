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

// Hereditary base-n representations, Goodstein sequences, base substitution
// and the Cantor-normal-form mirror of a representation.
//
// A representation is base-free: it is a tree of (exponent, coefficient)
// terms and every operation takes the base it is read in. Replacing the base
// by a larger number (or by omega) keeps the tree and changes the reading.
//
// Goodstein borrows turn one term c*B^e into (c-1)*B^e plus the E = e(B)
// terms (B-1)*B^hbr(j, B) for j < E. E grows quickly, so such a block is
// stored as a single run segment and expanded only on demand.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwb/natural.hpp"

namespace pwb {

class HereditaryRep {
 public:
  struct Segment {
    enum class Kind : std::uint8_t { Term, Run };
    Kind kind = Kind::Term;
    Natural coef;
    // Term: coef * B^exponent.
    std::shared_ptr<const HereditaryRep> exponent;
    // Run: coef * B^hbr(j, radix) for j = hi-1 down to lo.
    Natural radix, lo, hi;
  };

  HereditaryRep() = default;  // zero

  // Terms listed from the highest exponent down. Throws
  // Error(InvalidArgument) if a coefficient is zero or exponents do not
  // strictly decrease.
  static HereditaryRep from_terms(std::vector<std::pair<HereditaryRep, Natural>> terms);

  bool is_zero() const noexcept { return segments_.empty(); }
  const std::vector<Segment>& segments() const noexcept { return segments_; }

  // Number of terms once runs are expanded.
  Natural term_count() const;
  // Expanded terms, highest first. Throws Error(TooLarge) past `limit`.
  std::vector<std::pair<HereditaryRep, Natural>> terms(std::size_t limit = 1 << 20) const;

  // Equal as trees (runs compare equal to their expansion).
  friend bool operator==(const HereditaryRep& a, const HereditaryRep& b);

 private:
  friend struct RepAccess;
  std::vector<Segment> segments_;
};

// Unique hereditary representation of m in `base`. Throws Error(BadBase)
// when base < 2.
HereditaryRep hbr(const Natural& m, const Natural& base);

// Reads `rep` with every base occurrence replaced by `base`. Throws
// Error(BadBase) when base < 2 and Error(TooLarge) when the result would
// exceed `max_bits` bits.
constexpr std::size_t kDefaultValueBits = std::size_t{1} << 24;
Natural hbr_value(const HereditaryRep& rep, const Natural& base,
                  std::size_t max_bits = kDefaultValueBits);
std::optional<Natural> try_hbr_value(const HereditaryRep& rep, const Natural& base,
                                     std::size_t max_bits);
// An upper bound on log2(hbr_value(rep, base)); +inf when out of double range,
// -inf for zero.
double hbr_log2_bound(const HereditaryRep& rep, const Natural& base);

// Text such as "2^(2+1)+1" or "2*3^2+2*3+2". Runs longer than `max_terms`
// in total are cut short with "+...".
std::string to_string(const HereditaryRep& rep, const Natural& base, std::size_t max_terms = 64);

// --- the Goodstein step ---------------------------------------------------------

enum class StepBranch : std::uint8_t {
  Decrement,  // constant digit nonzero: subtract one from it
  Borrow,     // constant digit zero: the lowest power is expanded
};

struct StepResult {
  HereditaryRep rep;  // at base + 1
  StepBranch branch;
  std::optional<Natural> value;  // present when it fits the requested bits
};

// From the representation at `base` to hbr(hbr_value(rep, base+1) - 1, base+1).
// Throws Error(ZeroTerm) for the zero representation and Error(BadBase).
StepResult goodstein_step(const HereditaryRep& rep, const Natural& base,
                          std::size_t value_bits = 1 << 16);

struct GoodsteinEntry {
  std::uint64_t step;  // n: the entry is m_{n<n+1>}
  Natural base;        // n + 1
  std::optional<Natural> value;
  HereditaryRep rep;
};

struct GoodsteinTrace {
  Natural start;
  std::vector<GoodsteinEntry> entries;
  bool terminated = false;
};

// Starts from hbr(m, 2) and applies at most `max_steps` steps, stopping early
// at 0. Values larger than `value_bits` bits are left absent; 0 skips them.
GoodsteinTrace goodstein_sequence(const Natural& m, std::uint64_t max_steps,
                                  std::size_t value_bits = 1 << 16);

// --- base substitution --------------------------------------------------------------

struct ZDiff {
  int sign;                      // of d' = rep(z) - step(rep)(z)
  std::optional<Integer> exact;  // when it fits `max_bits`
  StepBranch branch;
};

// d' for the step from `rep` at `base`, with both sides read at z. The sign
// is decided structurally, which is exact because z exceeds every
// coefficient; the value is computed over the part that changed.
// Throws Error(BadBound) when z <= base, plus the errors of goodstein_step.
ZDiff z_substituted_diff(const HereditaryRep& rep, const Natural& base, const Natural& z,
                         std::size_t max_bits = 1 << 20);

// --- ordinals ------------------------------------------------------------------------

// An ordinal below epsilon_0 in Cantor normal form: a representation read
// with omega as the base.
class CnfOrdinal {
 public:
  CnfOrdinal() = default;  // 0
  explicit CnfOrdinal(HereditaryRep shape) : shape_(std::move(shape)) {}

  static CnfOrdinal finite(const Natural& n);
  static CnfOrdinal omega();
  static CnfOrdinal from_terms(std::vector<std::pair<CnfOrdinal, Natural>> terms);

  const HereditaryRep& shape() const noexcept { return shape_; }
  bool is_zero() const noexcept { return shape_.is_zero(); }

  friend bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) { return a.shape_ == b.shape_; }

 private:
  HereditaryRep shape_;
};

CnfOrdinal mirror_ordinal(const HereditaryRep& rep);

// Lexicographic on (exponent, coefficient) terms, highest first.
std::strong_ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);
std::strong_ordering compare_shapes(const HereditaryRep& a, const HereditaryRep& b);

// "0", "5", "w", "w+1", "w^w", "w^2*2+w*2+2"; long runs are cut with "+...".
std::string to_string(const CnfOrdinal& o, std::size_t max_terms = 64);

// True iff each nonzero entry's mirror is strictly greater than the next
// entry's. Throws Error(InvalidArgument) on an empty trace.
bool descent_check(const GoodsteinTrace& trace);

}  // namespace pwb
