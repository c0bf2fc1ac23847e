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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pwb {

// Arbitrary-precision integers. `Natural` is used where the value is known to
// be non-negative; `Integer` where a sign may appear.
using Natural = mpz_class;
using Integer = mpz_class;

// Parses a non-empty string of decimal digits.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Integer& value);

// Converts when the value fits, throws Error(TooLarge) otherwise.
std::uint64_t to_u64(const Natural& value);

bool fits_u64(const Natural& value) noexcept;

Natural from_u64(std::uint64_t value);

}  // namespace pwb
