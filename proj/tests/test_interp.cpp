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
#include "pwb/interp.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/proof_builder.hpp"

using namespace pwb;
using Kind = Verdict::Kind;

namespace {

Formula f(std::string_view text) { return parse_formula(text); }

Assignment assign(std::initializer_list<std::pair<const VarIndex, Natural>> values) { return Assignment(values); }

std::map<unsigned, mpz_class> plain(const Assignment& a) {
  std::map<unsigned, mpz_class> out;
  for (const auto& [k, v] : a) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("terms") {
  CHECK(eval_term(Term::numeral(7), {}) == 7);
  CHECK(eval_term(Term::add(Term::var(1), Term::succ(Term::zero())), assign({{1, 4}})) == 5);
  CHECK(eval_term(Term::mul(Term::var(1), Term::var(2)), assign({{1, 6}, {2, 7}})) == 42);
  CHECK(eval_term(Term::numeral(100000), {}) == 100000);
  CHECK_ERROR_CODE(eval_term(Term::var(3), assign({{1, 0}})), ErrorCode::UnboundVariable);
}

TEST_CASE("quantifier-free formulas") {
  CHECK(eval_qf(f("(0 = 0)"), {}));
  CHECK(eval_qf(f("~(x1' = 0)"), assign({{1, 0}})));
  CHECK_FALSE(eval_qf(f("((0 = 0) -> (0' = 0))"), {}));
  CHECK_ERROR_CODE(eval_qf(f("forall x1 . (x1 = x1)"), {}), ErrorCode::HasQuantifier);
  CHECK_ERROR_CODE(eval_qf(f("(x1 = 0)"), {}), ErrorCode::UnboundVariable);
}

TEST_CASE("quantifier-free evaluation agrees with the text evaluator") {
  testing::Gen g(31);
  std::size_t trues = 0;
  for (int k = 0; k < 10000; ++k) {
    const Formula x = g.qf_formula(4, 3);
    Assignment a;
    for (VarIndex v = 1; v <= 3; ++v) a[v] = from_u64(g.below(6));
    const bool expected = testing::text_eval_qf(to_string(x), plain(a));
    REQUIRE_MESSAGE(eval_qf(x, a) == expected, to_string(x));
    trues += expected;
  }
  CHECK(trues > 1000);
  CHECK(trues < 9000);
}

TEST_CASE("PA1-PA8 hold at every assignment up to 20") {
  for (Axiom ax : {Axiom::PA1, Axiom::PA2, Axiom::PA3, Axiom::PA4, Axiom::PA5, Axiom::PA6, Axiom::PA7,
                   Axiom::PA8}) {
    const Formula body = arithmetic_axiom(ax);
    Assignment a;
    for (unsigned x = 0; x <= 20; ++x) {
      for (unsigned y = 0; y <= 20; ++y) {
        for (unsigned z = 0; z <= 20; ++z) {
          a[1] = x;
          a[2] = y;
          a[3] = z;
          REQUIRE(eval_qf(body, a));
        }
      }
    }
  }
}

TEST_CASE("bounded Tarskian evaluation") {
  CHECK(eval_tarski_bounded(f("forall x1 . ((x1 + 0) = x1)"), 50, {}));
  CHECK_FALSE(eval_tarski_bounded(f("exists x1 . (x1 = 0'')"), 1, {}));
  CHECK(eval_tarski_bounded(f("exists x1 . (x1 = 0'')"), 2, {}));
  CHECK(eval_tarski_bounded(f("forall x1 . exists x2 . (x2 = x1)"), 10, {}));
  // True in the naturals, but the domain {0..5} has no successor for 5.
  CHECK_FALSE(eval_tarski_bounded(f("forall x1 . exists x2 . (x2 = x1')"), 5, {}));
  CHECK(eval_tarski_bounded(f("exists x2 . (x2 = (x1 + x1))"), 10, assign({{1, 3}})));
  CHECK_ERROR_CODE(eval_tarski_bounded(f("forall x1 . (x1 = x2)"), 3, {}), ErrorCode::UnboundVariable);

  testing::Gen g(32);
  for (int k = 0; k < 500; ++k) {
    const Formula x = g.qf_formula(3, 2);
    const Assignment a = assign({{1, from_u64(g.below(4))}, {2, from_u64(g.below(4))}});
    CHECK(eval_tarski_bounded(x, g.below(5), a) == eval_qf(x, a));
  }
}

TEST_CASE("prenex normal form") {
  const Prenex p = to_prenex(f("(forall x1 . (x1 = 0) -> exists x2 . (x2 = x3))"));
  REQUIRE(p.prefix.size() == 2);
  CHECK(p.prefix[0].first == Prenex::Quantifier::Exists);
  CHECK(p.prefix[1].first == Prenex::Quantifier::Exists);
  CHECK(p.matrix == f("((x1 = 0) -> (x2 = x3))"));

  // Clashing binders are renamed apart from each other and from free variables.
  const Prenex q = to_prenex(f("(forall x1 . (x1 = 0) -> forall x1 . (x1 = x2))"));
  REQUIRE(q.prefix.size() == 2);
  CHECK(q.prefix[0].second == 1);
  CHECK(q.prefix[1].second == 3);
  CHECK(q.matrix == f("((x1 = 0) -> (x3 = x2))"));
  const Prenex r = to_prenex(f("(forall x2 . (x2 = 0) -> (x2 = 0))"));
  CHECK(r.prefix[0] == std::pair{Prenex::Quantifier::Exists, VarIndex{3}});

  CHECK(universal_closure(f("(x2 = x1)")) == f("forall x1 . forall x2 . (x2 = x1)"));

  testing::Gen g(33);
  for (int k = 0; k < 300; ++k) {
    const Formula x = universal_closure(g.formula(3, 2));
    const Prenex pn = to_prenex(x);
    CHECK(is_quantifier_free(pn.matrix));
    for (std::uint64_t bound : {0u, 1u, 2u}) {
      CHECK(eval_tarski_bounded(prenex_formula(pn), bound, {}) == eval_tarski_bounded(x, bound, {}));
    }
  }
}

TEST_CASE("algorithmic verdicts") {
  const Verdict pa5 = eval_algorithmic(f("forall x1 . ((x1 + 0) = x1)"), 1000, {});
  CHECK(pa5.kind == Kind::VerifiedUpTo);
  CHECK(pa5.bound == 1000);

  const Verdict none = eval_algorithmic(f("exists x1 . (x1' = 0)"), 1000, {});
  CHECK(none.kind == Kind::NoWitnessUpTo);
  CHECK(none.bound == 1000);

  const Verdict two = eval_algorithmic(f("forall x1 . ~(x1 = 0'')"), 10, {});
  CHECK(two.kind == Kind::FalseAt);
  CHECK(two.witness == 2);
  CHECK(two.witness_vars == std::vector<VarIndex>{1});
  CHECK(two.witness_tuple == std::vector<std::uint64_t>{2});

  const Verdict root = eval_algorithmic(f("exists x1 . ((x1 * x1) = 0'''')"), 1000, {});
  CHECK(root.kind == Kind::WitnessAt);
  CHECK(root.witness == 2);

  CHECK(eval_algorithmic(f("(0 = 0)"), 5, {}).kind == Kind::True);
  CHECK(eval_algorithmic(f("(0' = 0)"), 5, {}).kind == Kind::False);
  CHECK(eval_algorithmic(f("exists x2 . (x2 = x1'')"), 5, assign({{1, 3}})).witness == 5);
  CHECK(eval_algorithmic(f("exists x2 . (x2 = x1'')"), 4, assign({{1, 3}})).kind == Kind::NoWitnessUpTo);
  CHECK_ERROR_CODE(eval_algorithmic(f("(x1 = 0)"), 5, {}), ErrorCode::UnboundVariable);
}

TEST_CASE("blocks of like quantifiers are searched as tuples") {
  const Verdict v = eval_algorithmic(f("exists x1 . exists x2 . ((x1 * x2) = 0'''''')"), 1000, {});
  REQUIRE(v.kind == Kind::WitnessAt);
  REQUIRE(v.witness_vars.size() == 2);
  CHECK(v.witness_tuple[0] * v.witness_tuple[1] == 6);
  CHECK(cantor_tuple(v.witness_tuple) == v.witness);

  // Alternation never yields a definite verdict.
  const Verdict alt = eval_algorithmic(f("forall x1 . exists x2 . (x2 = x1')"), 50, {});
  CHECK(alt.kind == Kind::VerifiedUpTo);
  CHECK(alt.bound == 50);
}

TEST_CASE("Cantor tuples") {
  for (std::size_t arity = 1; arity <= 4; ++arity) {
    for (std::uint64_t code = 0; code < 2000; ++code) {
      const auto t = cantor_untuple(code, arity);
      REQUIRE(t.size() == arity);
      CHECK(cantor_tuple(t) == code);
    }
  }
  CHECK(cantor_untuple(0, 0).empty());
  const std::vector<std::uint64_t> big{std::uint64_t{1} << 40, std::uint64_t{1} << 40};
  CHECK_ERROR_CODE(cantor_tuple(big), ErrorCode::TooLarge);
}

TEST_CASE("budget monotonicity") {
  testing::Gen g(34);
  const std::vector<std::uint64_t> ladder{10, 100, 1000};
  for (int k = 0; k < 200; ++k) {
    // Thresholds spread across the ladder so every verdict kind shows up.
    const Term n = Term::numeral(g.below(1500));
    std::vector<Formula> shapes{
        Formula::forall(1, Formula::negation(Formula::eq(Term::var(1), n))),
        Formula::exists(1, Formula::eq(Term::add(Term::var(1), Term::var(1)), n)),
        Formula::exists(1, Formula::exists(2, Formula::eq(Term::add(Term::var(1), Term::var(2)), n))),
        Formula::forall(1, Formula::forall(2, Formula::negation(Formula::eq(Term::mul(Term::var(1), Term::var(2)), n)))),
    };
    for (const Formula& x : shapes) {
      std::vector<Verdict> vs;
      for (std::uint64_t b : ladder) vs.push_back(eval_algorithmic(x, b, {}));
      for (std::size_t i = 0; i < ladder.size(); ++i) {
        const Verdict& v = vs[i];
        if (v.kind == Kind::FalseAt || v.kind == Kind::WitnessAt) {
          CHECK(v.witness <= ladder[i]);
          for (std::size_t j = 0; j < ladder.size(); ++j) {
            if (ladder[j] >= v.witness) CHECK(vs[j] == v);
          }
        } else {
          CHECK(v.bound == ladder[i]);
          for (std::size_t j = i + 1; j < ladder.size(); ++j) {
            const bool same_kind = vs[j].kind == v.kind && vs[j].bound == ladder[j];
            const bool found_later = (vs[j].kind == Kind::FalseAt || vs[j].kind == Kind::WitnessAt) &&
                                     vs[j].witness > ladder[i];
            CHECK((same_kind || found_later));
          }
        }
      }
    }
  }
}

TEST_CASE("quantifier-free closed formulas: all evaluators agree") {
  testing::Gen g(35);
  for (int k = 0; k < 300; ++k) {
    const Formula x = g.closed_qf_formula(3);
    const bool qf = eval_qf(x, {});
    CHECK(eval_tarski_bounded(x, g.below(10), {}) == qf);
    CHECK(eval_algorithmic(x, 1 + g.below(100), {}).kind == (qf ? Kind::True : Kind::False));
  }
}

TEST_CASE("lines of accepted proofs are never refuted") {
  testing::Gen g(36);
  std::vector<Derivation> corpus{testing::zero_plus_zero_proof(), testing::numeral_inequality(0, 3),
                                 testing::not_all_differ_from(2)};
  for (int k = 0; k < 40; ++k) corpus.push_back(g.derivation(10, 0));
  for (const Derivation& d : corpus) {
    REQUIRE(check(d).is_proof);
    for (const ProofLine& line : d.lines) {
      const Verdict v = eval_algorithmic(universal_closure(line.formula), 30, {});
      CHECK_MESSAGE(v.kind != Kind::FalseAt, to_string(line.formula));
      CHECK(v.kind != Kind::False);
    }
  }
}

TEST_CASE("Goedelian satisfaction relative to a corpus") {
  const Derivation zero = testing::zero_plus_zero_proof();
  TheoremCorpus corpus(std::span(&zero, 1));
  CHECK(eval_godelian(f("((0 + 0) = 0)"), corpus, 10).kind == Kind::True);
  CHECK(eval_godelian(f("(0 = 0)"), TheoremCorpus{}, 10).kind == Kind::False);
  CHECK(eval_godelian(f("(0 = 0)"), corpus, 10).kind == Kind::False);

  // forall x1 . ~(x1 = 3) with F(0), F(1), F(2) proved, then a gap at 3.
  TheoremCorpus c2;
  for (std::uint64_t n = 0; n < 3; ++n) c2.add(testing::numeral_inequality(n, 3));
  const Formula all = f("forall x1 . ~(x1 = 0''')");
  CHECK(eval_godelian(all, c2, 2) == Verdict{Kind::VerifiedUpTo, 0, {}, {}, 2});
  const Verdict gap = eval_godelian(all, c2, 10);
  CHECK(gap.kind == Kind::FalseAt);
  CHECK(gap.witness == 3);

  // exists x1 . (x1 = 2) is witnessed once (2 = 2) is a theorem.
  TheoremCorpus c3;
  CHECK(eval_godelian(f("exists x1 . (x1 = 0'')"), c3, 5).kind == Kind::NoWitnessUpTo);
  testing::Builder b;
  b.reflexivity(Term::numeral(2));
  c3.add(b.derivation());
  const Verdict w = eval_godelian(f("exists x1 . (x1 = 0'')"), c3, 5);
  CHECK(w.kind == Kind::WitnessAt);
  CHECK(w.witness == 2);

  CHECK_ERROR_CODE(eval_godelian(f("(x1 = 0)"), corpus, 5), ErrorCode::UnboundVariable);
  Derivation hyp = zero;
  hyp.hypotheses = {f("(0 = 0)")};
  CHECK_ERROR_CODE(corpus.add(hyp), ErrorCode::UncheckedCorpus);
  Derivation broken = zero;
  broken.lines[3].justification = ModusPonens{0, 2};
  CHECK_ERROR_CODE(TheoremCorpus(std::span(&broken, 1)), ErrorCode::UncheckedCorpus);
}
