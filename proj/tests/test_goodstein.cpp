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

#include "doctest.h"
#include "pwb/goodstein.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pwb;

namespace {

const HereditaryRep kZero{};

HereditaryRep rep_of(unsigned long m, unsigned long b) { return hbr(Natural(m), Natural(b)); }

// Checks the tree against positional digits, level by level.
void check_digits(const HereditaryRep& rep, const Natural& m, const Natural& b) {
  const auto digits = testing::positional_digits(m, b);
  const auto terms = rep.terms();
  REQUIRE(terms.size() == digits.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(terms[i].second == digits[i].second);
    CHECK(terms[i].second >= 1);
    CHECK(terms[i].second < b);
    check_digits(terms[i].first, digits[i].first, b);
  }
}

CnfOrdinal omega_times(unsigned long k, unsigned long plus) {
  return CnfOrdinal::from_terms({{CnfOrdinal::finite(1), k}, {CnfOrdinal(), plus}});
}

}  // namespace

TEST_CASE("hereditary representation shape") {
  const HereditaryRep one = HereditaryRep::from_terms({{kZero, 1}});
  const HereditaryRep two = HereditaryRep::from_terms({{one, 1}});
  const HereditaryRep three = HereditaryRep::from_terms({{one, 1}, {kZero, 1}});
  CHECK(rep_of(1, 2) == one);
  CHECK(rep_of(2, 2) == two);
  CHECK(rep_of(9, 2) == HereditaryRep::from_terms({{three, 1}, {kZero, 1}}));
  CHECK(to_string(rep_of(9, 2), 2) == "2^(2+1)+1");
  CHECK(to_string(rep_of(26, 3), 3) == "2*3^2+2*3+2");
  CHECK(to_string(rep_of(0, 5), 5) == "0");
  CHECK(rep_of(0, 2).is_zero());
  CHECK(rep_of(0, 2).term_count() == 0);
  CHECK(rep_of(9, 2).term_count() == 2);

  CHECK_ERROR_CODE(rep_of(3, 1), ErrorCode::BadBase);
  CHECK_ERROR_CODE(HereditaryRep::from_terms({{kZero, 0}}), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(HereditaryRep::from_terms({{kZero, 1}, {one, 1}}), ErrorCode::InvalidArgument);
}

TEST_CASE("representation round trip against positional digits") {
  for (unsigned long b = 2; b <= 7; ++b) {
    for (unsigned long m = 0; m < 2000; ++m) {
      const HereditaryRep r = rep_of(m, b);
      REQUIRE(hbr_value(r, Natural(b)) == m);
      check_digits(r, Natural(m), Natural(b));
    }
  }
  const Natural big = Natural("123456789012345678901234567890");
  CHECK(hbr_value(hbr(big, 3), 3) == big);
}

TEST_CASE("reading a representation in another base") {
  CHECK(hbr_value(rep_of(4, 2), 3) == 27);
  CHECK(hbr_value(rep_of(9, 2), 3) == 82);
  for (unsigned long b = 2; b <= 5; ++b) {
    for (unsigned long m = 0; m < 300; ++m) {
      CHECK(hbr_value(rep_of(m, b), Natural(b + 1)) == testing::bump_base(Natural(m), Natural(b)));
    }
  }
  CHECK_ERROR_CODE(hbr_value(rep_of(16, 2), 10, 64), ErrorCode::TooLarge);
  CHECK_FALSE(try_hbr_value(rep_of(16, 2), 10, 64).has_value());
  CHECK(try_hbr_value(rep_of(16, 2), 3, 64) == std::optional<Natural>(Natural("7625597484987")));
  CHECK(hbr_log2_bound(rep_of(16, 2), 3) >= 42.79);
  CHECK_ERROR_CODE(hbr_value(rep_of(4, 2), 1), ErrorCode::BadBase);
}

TEST_CASE("single steps") {
  const StepResult four = goodstein_step(rep_of(4, 2), 2);
  CHECK(four.branch == StepBranch::Borrow);
  CHECK(four.value == std::optional<Natural>(26));
  CHECK(four.rep == rep_of(26, 3));

  const StepResult one = goodstein_step(rep_of(1, 2), 2);
  CHECK(one.branch == StepBranch::Decrement);
  CHECK(one.rep.is_zero());
  CHECK(one.value == std::optional<Natural>(0));

  const StepResult three = goodstein_step(rep_of(3, 2), 2);
  CHECK(three.branch == StepBranch::Decrement);
  CHECK(three.value == std::optional<Natural>(3));

  CHECK_ERROR_CODE(goodstein_step(kZero, 2), ErrorCode::ZeroTerm);
  CHECK_ERROR_CODE(goodstein_step(rep_of(3, 2), 1), ErrorCode::BadBase);

  for (unsigned long b = 2; b <= 6; ++b) {
    for (unsigned long m = 1; m < 400; ++m) {
      const StepResult s = goodstein_step(rep_of(m, b), Natural(b));
      const Natural next = testing::bump_base(Natural(m), Natural(b)) - 1;
      REQUIRE(s.value == std::optional<Natural>(next));
      CHECK(s.rep == hbr(next, Natural(b + 1)));
      CHECK((s.branch == StepBranch::Decrement) == (m % b != 0));
    }
  }
}

TEST_CASE("a borrow expands the lowest power into a block of top digits") {
  // c*B^e with no constant digit becomes (c-1)*B^e followed by the E = e(B)
  // terms (B-1)*B^hbr(j, B), j = E-1 down to 0.
  for (unsigned long b = 2; b <= 5; ++b) {
    const unsigned long big = b + 1;
    for (unsigned long m = b; m < 500; m += b) {
      const HereditaryRep r = rep_of(m, b);
      const auto before = r.terms();
      const StepResult s = goodstein_step(r, Natural(b));
      REQUIRE(s.branch == StepBranch::Borrow);
      const auto after = s.rep.terms();
      const auto& [e, c] = before.back();
      const Natural E = hbr_value(e, Natural(big));
      const std::size_t k = E.get_ui();
      REQUIRE(after.size() >= k);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& term = after[after.size() - 1 - i];
        CHECK(term.first == hbr(Natural(static_cast<unsigned long>(i)), Natural(big)));
        CHECK(term.second == big - 1);
      }
      CHECK(after.size() == before.size() - (c == 1 ? 1 : 0) + k);
    }
  }
  // Huge blocks stay folded: 2^2^2^2 at base 2 borrows 3^3^3 terms.
  const StepResult s = goodstein_step(rep_of(65536, 2), 2, 64);
  CHECK_FALSE(s.value.has_value());
  CHECK(s.rep.term_count() == Natural("7625597484987"));
  CHECK(to_string(s.rep, 3, 4).ends_with("+..."));
}

TEST_CASE("sequences against the bump-and-decrement oracle") {
  auto values = [](const GoodsteinTrace& t) {
    std::vector<Natural> out;
    for (const auto& e : t.entries) out.push_back(e.value.value());
    return out;
  };
  const GoodsteinTrace g2 = goodstein_sequence(2, 100);
  CHECK(values(g2) == std::vector<Natural>{2, 2, 1, 0});
  CHECK(g2.terminated);
  CHECK(values(goodstein_sequence(3, 100)) == std::vector<Natural>{3, 3, 3, 2, 1, 0});
  CHECK(values(goodstein_sequence(3, 100)) == testing::goodstein_values(3, 100));
  CHECK(values(goodstein_sequence(1, 100)) == std::vector<Natural>{1, 0});
  CHECK(values(goodstein_sequence(0, 100)) == std::vector<Natural>{0});

  const GoodsteinTrace g4 = goodstein_sequence(4, 9);
  CHECK_FALSE(g4.terminated);
  CHECK(values(g4) == std::vector<Natural>{4, 26, 41, 60, 83, 109, 139, 173, 211, 253});
  CHECK(values(g4) == testing::goodstein_values(4, 10));
  for (std::size_t i = 0; i < g4.entries.size(); ++i) {
    CHECK(g4.entries[i].step == i + 1);
    CHECK(g4.entries[i].base == i + 2);
    CHECK(g4.entries[i].rep == hbr(*g4.entries[i].value, g4.entries[i].base));
  }

  // From 18 on the third value already passes 2^4096.
  for (unsigned long m = 5; m <= 17; ++m) {
    const auto oracle = testing::goodstein_values(Natural(m), 6);
    CHECK(values(goodstein_sequence(Natural(m), 5, 4096)) == oracle);
  }

  // Above the bit cap the structure keeps going without values.
  const GoodsteinTrace capped = goodstein_sequence(16, 3, 32);
  CHECK(capped.entries.size() == 4);
  CHECK(capped.entries[0].value.has_value());
  CHECK_FALSE(capped.entries[3].value.has_value());
  const GoodsteinTrace no_values = goodstein_sequence(4, 3, 0);
  for (const auto& e : no_values.entries) CHECK_FALSE(e.value.has_value());
  CHECK(no_values.entries[3].rep == rep_of(60, 5));
}

TEST_CASE("base substitution differences") {
  const ZDiff three = z_substituted_diff(rep_of(3, 2), 2, 10);
  CHECK(three.branch == StepBranch::Decrement);
  CHECK(three.sign == 1);
  CHECK(three.exact == std::optional<Integer>(1));

  const ZDiff four = z_substituted_diff(rep_of(4, 2), 2, 10);
  CHECK(four.branch == StepBranch::Borrow);
  CHECK(four.sign == 1);
  // 10^10 - (2*10^2 + 2*10 + 2)
  CHECK(four.exact == std::optional<Integer>(Integer("9999999778")));

  CHECK_ERROR_CODE(z_substituted_diff(rep_of(3, 2), 2, 2), ErrorCode::BadBound);
  CHECK_ERROR_CODE(z_substituted_diff(rep_of(3, 3), 3, 3), ErrorCode::BadBound);
  CHECK_ERROR_CODE(z_substituted_diff(kZero, 2, 10), ErrorCode::ZeroTerm);

  // Direct evaluation of both sides at z, where that is feasible.
  std::size_t compared = 0;
  for (unsigned long b = 2; b <= 4; ++b) {
    for (unsigned long m = 1; m < 200; ++m) {
      const Natural next = testing::bump_base(Natural(m), Natural(b)) - 1;
      for (unsigned long z : {b + 1, b + 2, b + 7}) {
        const ZDiff d = z_substituted_diff(rep_of(m, b), Natural(b), Natural(z));
        CHECK(d.sign == 1);
        const auto lhs = try_hbr_value(rep_of(m, b), Natural(z), 1 << 16);
        const auto rhs = try_hbr_value(hbr(next, Natural(b + 1)), Natural(z), 1 << 16);
        if (!lhs || !rhs) continue;
        const Integer direct = Integer(*lhs) - Integer(*rhs);
        REQUIRE(d.exact.has_value());
        CHECK(*d.exact == direct);
        CHECK(d.sign == sgn(direct));
        if (d.branch == StepBranch::Decrement) CHECK(*d.exact == 1);
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);

  // Exact values are withheld past the bit cap, the sign is not.
  const ZDiff big = z_substituted_diff(rep_of(65536, 2), 2, 100, 64);
  CHECK(big.sign == 1);
  CHECK_FALSE(big.exact.has_value());
}

TEST_CASE("Z(m) decreases along a sequence for a fixed z") {
  // With z fixed above every base used, each step's z-reading drops.
  const Natural z = 40;
  for (unsigned long m : {3ul, 4ul, 5ul, 11ul}) {
    const GoodsteinTrace t = goodstein_sequence(Natural(m), 30, 0);
    for (std::size_t i = 0; i + 1 < t.entries.size(); ++i) {
      const Natural here = hbr_value(t.entries[i].rep, z, 1 << 16);
      const Natural there = hbr_value(t.entries[i + 1].rep, z, 1 << 16);
      CHECK(there < here);
    }
  }
}

TEST_CASE("ordinal mirror") {
  CHECK(to_string(mirror_ordinal(rep_of(4, 2))) == "w^w");
  CHECK(to_string(mirror_ordinal(rep_of(3, 2))) == "w+1");
  CHECK(to_string(mirror_ordinal(rep_of(0, 2))) == "0");
  CHECK(to_string(mirror_ordinal(rep_of(26, 3))) == "w^2*2+w*2+2");
  CHECK(to_string(mirror_ordinal(rep_of(9, 2))) == "w^(w+1)+1");
  CHECK(mirror_ordinal(rep_of(5, 7)) == CnfOrdinal::finite(5));
  CHECK(to_string(CnfOrdinal::omega()) == "w");
  CHECK(to_string(omega_times(5, 3)) == "w*5+3");
}

TEST_CASE("ordinal comparison") {
  const CnfOrdinal w = CnfOrdinal::omega();
  const CnfOrdinal ww = CnfOrdinal::from_terms({{w, 1}});
  CHECK(cnf_compare(w, CnfOrdinal::finite(1000000)) == std::strong_ordering::greater);
  CHECK(cnf_compare(ww, omega_times(5, 3)) == std::strong_ordering::greater);
  CHECK(cnf_compare(omega_times(5, 3), omega_times(5, 4)) == std::strong_ordering::less);
  CHECK(cnf_compare(omega_times(5, 3), omega_times(4, 1000)) == std::strong_ordering::greater);
  CHECK(cnf_compare(ww, ww) == std::strong_ordering::equal);
  CHECK(cnf_compare(CnfOrdinal(), CnfOrdinal::finite(0)) == std::strong_ordering::equal);

  // The mirror preserves order within one base.
  for (unsigned long b = 2; b <= 5; ++b) {
    std::vector<CnfOrdinal> mirrors;
    for (unsigned long m = 0; m < 150; ++m) mirrors.push_back(mirror_ordinal(rep_of(m, b)));
    for (unsigned long m = 0; m < mirrors.size(); ++m) {
      for (unsigned long n = 0; n < mirrors.size(); ++n) {
        REQUIRE((cnf_compare(mirrors[m], mirrors[n]) == (m <=> n)));
        CHECK(cnf_compare(mirrors[n], mirrors[m]) == (n <=> m));
      }
    }
  }

  testing::Gen g(41);
  std::vector<CnfOrdinal> pool;
  for (int k = 0; k < 60; ++k) {
    pool.push_back(mirror_ordinal(rep_of(g.below(5000), 2 + g.below(4))));
  }
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const auto ab = cnf_compare(a, b);
      CHECK(cnf_compare(b, a) == (0 <=> ab));
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      for (const auto& c : pool) {
        if (ab == std::strong_ordering::less && cnf_compare(b, c) == std::strong_ordering::less) {
          CHECK(cnf_compare(a, c) == std::strong_ordering::less);
        }
      }
    }
  }
}

TEST_CASE("descent along sequences") {
  for (unsigned long m = 0; m <= 12; ++m) {
    const GoodsteinTrace t = goodstein_sequence(Natural(m), 200, 0);
    CHECK(descent_check(t));
  }
  GoodsteinTrace t = goodstein_sequence(5, 6);
  REQUIRE(descent_check(t));
  t.entries.insert(t.entries.begin() + 3, t.entries[3]);
  CHECK_FALSE(descent_check(t));

  GoodsteinTrace swapped = goodstein_sequence(5, 6);
  std::swap(swapped.entries[1], swapped.entries[2]);
  CHECK_FALSE(descent_check(swapped));

  CHECK_ERROR_CODE(descent_check(GoodsteinTrace{}), ErrorCode::InvalidArgument);
}
