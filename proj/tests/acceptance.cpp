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

// Acceptance run: one PASS/FAIL line per criterion. Limits are wall-clock
// seconds; a criterion without a limit only has to complete.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pwb/error.hpp"
#include "pwb/godel.hpp"
#include "pwb/goodstein.hpp"
#include "pwb/interp.hpp"
#include "pwb/proof.hpp"
#include "pwb/tm.hpp"
#include "support/generators.hpp"
#include "support/mutation.hpp"
#include "support/oracles.hpp"

using namespace pwb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages and counts the rest.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures: " + notes_};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

std::string str(const Natural& n) { return to_decimal(n); }

Outcome hereditary_representation() {
  Tally t;
  std::size_t checked = 0;
  for (unsigned long b = 2; b <= 6; ++b) {
    const Natural base(b);
    for (unsigned long m = 0; m <= 100000; ++m) {
      const Natural n(m);
      const HereditaryRep r = hbr(n, base);
      if (hbr_value(r, base) != n) t.fail("m=" + std::to_string(m) + " base " + std::to_string(b));
      ++checked;
    }
  }
  const std::string nine = to_string(hbr(9, 2), 2);
  t.expect(nine == "2^(2+1)+1", "hbr(9, 2) printed as " + nine);
  return t.outcome(std::to_string(checked) + " round trips, 9 = " + nine);
}

Outcome goodstein_sequences() {
  Tally t;
  // The oracle first, against the literal sequences.
  const std::vector<std::vector<Natural>> expected{
      {1, 0}, {2, 2, 1, 0}, {3, 3, 3, 2, 1, 0}, {4, 26, 41, 60, 83, 109, 139, 173, 211, 253}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto oracle = testing::goodstein_values(Natural(static_cast<unsigned long>(i + 1)), 10);
    t.expect(oracle == expected[i], "oracle disagrees on G(" + std::to_string(i + 1) + ")");
  }
  for (unsigned long m = 1; m <= 3; ++m) {
    const GoodsteinTrace tr = goodstein_sequence(Natural(m), 1000);
    t.expect(tr.terminated, "G(" + std::to_string(m) + ") did not terminate");
    std::vector<Natural> values;
    for (const auto& e : tr.entries) values.push_back(e.value.value_or(-1));
    t.expect(values == expected[m - 1], "G(" + std::to_string(m) + ") values differ");
  }
  const GoodsteinTrace g4 = goodstein_sequence(4, 1000);
  t.expect(!g4.terminated, "G(4) terminated within 1000 steps");
  t.expect(g4.entries.size() == 1001, "G(4) has " + std::to_string(g4.entries.size()) + " entries");
  for (std::size_t i = 0; i < 10; ++i) {
    t.expect(g4.entries[i].value == std::optional<Natural>(expected[3][i]), "G(4) entry " + std::to_string(i));
  }
  // Every value G(4) reaches agrees with the oracle.
  const auto oracle4 = testing::goodstein_values(4, 1001);
  for (std::size_t i = 0; i < g4.entries.size() && i < oracle4.size(); ++i) {
    if (g4.entries[i].value != std::optional<Natural>(oracle4[i])) t.fail("G(4) entry " + std::to_string(i));
  }
  std::string last = g4.entries.back().value ? str(*g4.entries.back().value) : "?";
  return t.outcome("G(1..3) terminate, G(4) at step 1000 has value " + last);
}

Outcome ordinal_descent() {
  Tally t;
  std::size_t comparisons = 0;
  for (unsigned long m = 0; m <= 20; ++m) {
    const GoodsteinTrace tr = goodstein_sequence(Natural(m), 1000, 0);
    for (std::size_t k = 0; k + 1 < tr.entries.size(); ++k) {
      const auto order = cnf_compare(mirror_ordinal(tr.entries[k + 1].rep), mirror_ordinal(tr.entries[k].rep));
      ++comparisons;
      if (order != std::strong_ordering::less) {
        t.fail("m=" + std::to_string(m) + " step " + std::to_string(k + 1));
      }
    }
    t.expect(descent_check(tr), "descent_check rejects m=" + std::to_string(m));
  }
  return t.outcome(std::to_string(comparisons) + " consecutive pairs strictly decrease");
}

Outcome z_positivity() {
  Tally t;
  std::size_t steps = 0, decrements = 0;
  for (unsigned long m = 1; m <= 500; ++m) {
    const GoodsteinTrace tr = goodstein_sequence(Natural(m), 50, 0);
    for (const GoodsteinEntry& e : tr.entries) {
      if (e.rep.is_zero()) break;
      const ZDiff d = z_substituted_diff(e.rep, e.base, e.base + 50);
      ++steps;
      const std::string at = "m=" + std::to_string(m) + " step " + std::to_string(e.step);
      t.expect(d.sign > 0, "d' <= 0 at " + at);
      if (d.branch == StepBranch::Decrement) {
        ++decrements;
        t.expect(d.exact == std::optional<Integer>(1), "d' != 1 in a decrement at " + at);
      }
    }
  }
  return t.outcome(std::to_string(steps) + " steps positive, " + std::to_string(decrements) +
                   " decrements exactly 1");
}

Outcome beta_function() {
  Tally t;
  testing::Gen g(2024);
  for (int k = 0; k < 100; ++k) {
    std::vector<Natural> seq(1 + g.below(5));
    for (auto& v : seq) v = g.below(21);
    const BetaPair p = encode_sequence(seq);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (beta_eval(p.b, p.c, static_cast<unsigned long>(i)) != seq[i]) {
        t.fail("sequence " + std::to_string(k) + " index " + std::to_string(i));
      }
    }
    const auto moduli = beta_moduli(p.c, seq.size());
    t.expect(pairwise_coprime(moduli), "moduli not coprime for sequence " + std::to_string(k));
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      for (std::size_t j = i + 1; j < moduli.size(); ++j) {
        t.expect(gcd(moduli[i], moduli[j]) == 1, "gcd check for sequence " + std::to_string(k));
      }
    }
  }
  return t.outcome("100 sequences round trip, moduli pairwise coprime");
}

Outcome proof_kernel() {
  Tally t;
  const Derivation zero = testing::zero_plus_zero_proof();
  const CheckReport r = check(zero);
  t.expect(r.accepted && r.is_proof, "the four-line proof is rejected");

  testing::Gen g(77);
  std::vector<Derivation> corpus{zero};
  for (int k = 0; k < 60; ++k) corpus.push_back(g.derivation(8 + k % 8, k % 3));
  std::size_t mutants = 0, rejected = 0, valid = 0;
  for (const Derivation& d : corpus) {
    const testing::MutationReport m = testing::mutate_references(d);
    mutants += m.mutants;
    rejected += m.rejected;
    valid += m.still_valid;
    for (const auto& msg : m.disagreements) t.fail(msg);
  }
  t.expect(rejected + valid == mutants, "unclassified mutants");

  std::size_t deduced = 0;
  for (int k = 0; k < 200; ++k) {
    const Derivation d = g.derivation(10 + k % 10, 1 + k % 3);
    const Derivation p = deduction_transform(d);
    const CheckReport pr = check(p);
    const bool ok = pr.accepted && p.hypotheses.size() + 1 == d.hypotheses.size();
    t.expect(ok, "deduction output rejected for derivation " + std::to_string(k) + ": " + pr.detail);
    deduced += ok;
  }
  std::ostringstream s;
  s << mutants << " mutants (" << rejected << " rejected, " << valid << " valid), " << deduced
    << "/200 deductions accepted";
  return t.outcome(s.str());
}

Outcome godel_coding() {
  Tally t;
  testing::Gen g(99);
  for (int k = 0; k < 1000; ++k) {
    const Formula f = g.formula(4, 4);
    if (!(decode_formula(encode_formula(f)) == f)) t.fail("round trip of " + to_string(f));
  }
  std::size_t proofs = 0, substitutions = 0;
  for (int k = 0; k < 50; ++k) {
    const Derivation d = k == 0 ? testing::zero_plus_zero_proof() : g.derivation(6 + k % 6, 0);
    const GodelCode x = encode_proof(d);
    const Formula& last = d.lines.back().formula;
    t.expect(proof_pair(x, encode_formula(last)), "proof_pair false on proof " + std::to_string(k));
    ++proofs;
    // The proof's code pairs with its last formula and nothing else.
    std::vector<Formula> others{Formula::negation(last), g.formula(3, 2), g.closed_qf_formula(3)};
    for (const ProofLine& line : d.lines) others.push_back(line.formula);
    for (const Formula& other : others) {
      if (other == last) continue;
      t.expect(!proof_pair(x, encode_formula(other)), "proof " + std::to_string(k) + " pairs with another formula");
      ++substitutions;
    }
    // Ending the same lines with ~last instead is not a proof of ~last,
    // unless ~last already occurs earlier.
    std::vector<Formula> seq;
    for (const ProofLine& line : d.lines) seq.push_back(line.formula);
    const Formula neg = Formula::negation(last);
    if (std::find(seq.begin(), seq.end() - 1, neg) == seq.end() - 1) {
      seq.back() = neg;
      t.expect(!proof_pair(encode_sequence_of(seq), encode_formula(neg)),
               "substituted last formula accepted in proof " + std::to_string(k));
      ++substitutions;
    }
  }
  return t.outcome("1000 round trips, " + std::to_string(proofs) + " proofs, " +
                   std::to_string(substitutions) + " substitutions refused");
}

bool verdict_contract(const std::vector<std::uint64_t>& ladder, const std::vector<Verdict>& vs) {
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const Verdict& v = vs[i];
    const bool found = v.kind == Verdict::Kind::FalseAt || v.kind == Verdict::Kind::WitnessAt;
    const bool definite = found || v.kind == Verdict::Kind::True || v.kind == Verdict::Kind::False;
    if (found && v.witness > ladder[i]) return false;
    if (!definite && v.bound != ladder[i]) return false;
    for (std::size_t j = i + 1; j < ladder.size(); ++j) {
      // A definite verdict never changes with more budget; a bounded one
      // may only be overturned by a witness beyond the smaller budget.
      if (definite && !(vs[j] == v)) return false;
      if (!definite) {
        const bool later_found = vs[j].kind == Verdict::Kind::FalseAt || vs[j].kind == Verdict::Kind::WitnessAt;
        if (!(vs[j].kind == v.kind || (later_found && vs[j].witness > ladder[i]))) return false;
      }
    }
  }
  return true;
}

Outcome interpretation() {
  Tally t;
  testing::Gen g(7);
  for (int k = 0; k < 10000; ++k) {
    const Formula f = g.qf_formula(4, 3);
    Assignment a;
    std::map<unsigned, mpz_class> plain;
    for (VarIndex v = 1; v <= 3; ++v) plain[v] = a[v] = from_u64(g.below(8));
    if (eval_qf(f, a) != testing::text_eval_qf(to_string(f), plain)) t.fail("disagreement on " + to_string(f));
  }

  const std::vector<std::uint64_t> ladder{10, 100, 1000};
  std::size_t formulas = 0;
  for (int k = 0; k < 300; ++k) {
    const Term n = Term::numeral(g.below(1200));
    const Term x1 = Term::var(1), x2 = Term::var(2);
    std::vector<Formula> shapes{
        Formula::forall(1, Formula::negation(Formula::eq(x1, n))),
        Formula::exists(1, Formula::eq(Term::add(x1, x1), n)),
        Formula::exists(1, Formula::exists(2, Formula::eq(Term::add(x1, x2), n))),
        Formula::forall(1, Formula::forall(2, Formula::negation(Formula::eq(Term::mul(x1, x2), n)))),
        Formula::forall(1, Formula::exists(2, Formula::eq(x2, Term::succ(x1)))),
        universal_closure(g.formula(3, 2)),
    };
    for (const Formula& f : shapes) {
      std::vector<Verdict> vs;
      for (std::uint64_t b : ladder) vs.push_back(eval_algorithmic(f, b, {}));
      t.expect(verdict_contract(ladder, vs), "ladder violated by " + to_string(f));
      ++formulas;
    }
  }

  std::size_t assignments = 0;
  for (Axiom ax : {Axiom::PA1, Axiom::PA2, Axiom::PA3, Axiom::PA4, Axiom::PA5, Axiom::PA6, Axiom::PA7,
                   Axiom::PA8}) {
    const Formula body = arithmetic_axiom(ax);
    const std::set<VarIndex> vars = free_vars(body);
    const std::vector<VarIndex> vv(vars.begin(), vars.end());
    std::vector<unsigned long> digits(vv.size(), 0);
    Assignment a;
    for (VarIndex v : vv) a[v] = 0;
    bool ok = true;
    for (;;) {
      ++assignments;
      if (!eval_qf(body, a)) ok = false;
      std::size_t i = 0;
      while (i < vv.size() && digits[i] == 100) {
        digits[i] = 0;
        a[vv[i]] = 0;
        ++i;
      }
      if (i == vv.size()) break;
      a[vv[i]] = ++digits[i];
    }
    t.expect(ok, "PA axiom fails: " + to_string(body));
  }
  return t.outcome("10000 instances agree, " + std::to_string(formulas) + " ladders respected, " +
                   std::to_string(assignments) + " axiom assignments true");
}

Outcome looping_oracle() {
  Tally t;
  std::size_t runs = 0, cycles = 0;
  for (const auto& [name, tm] : zoo::all()) {
    for (const char* input : {"", "1", "11", "111", "1_1"}) {
      const std::string in = input;
      if (in.find_first_not_of(tm.alphabet()) != std::string::npos) continue;
      const RunResult r = run_with_oracle(tm, in, {.fuel = 10000, .observer = {}});
      ++runs;
      if (r.kind == RunResult::Kind::SelfTerminated) {
        ++cycles;
        bool ok = false;
        try {
          ok = replay_cycle(tm, r, r.history);
        } catch (const Error& e) {
          t.fail(name + " replay: " + e.what());
        }
        t.expect(ok, name + " on '" + in + "' fails replay");
      }
      if (name == "right_forever") {
        t.expect(r.kind == RunResult::Kind::FuelExhausted && r.steps == 10000,
                 "right_forever reported as " + std::string(run_kind_name(r.kind)));
      }
    }
  }
  const RunResult stay = run_with_oracle(zoo::stay_put(), "", {.fuel = 10000, .observer = {}});
  t.expect(stay.kind == RunResult::Kind::SelfTerminated && stay.first == 0 && stay.repeat == 1,
           "stay_put not detected at (0, 1)");
  return t.outcome(std::to_string(runs) + " runs, " + std::to_string(cycles) +
                   " cycles replayed, stay_put at (0, 1)");
}

struct Criterion {
  const char* name;
  std::optional<double> limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"hereditary-representation", 30.0, hereditary_representation},
      {"goodstein-sequences", 10.0, goodstein_sequences},
      {"ordinal-descent", 60.0, ordinal_descent},
      {"z-substitution-positivity", std::nullopt, z_positivity},
      {"beta-function", 60.0, beta_function},
      {"proof-kernel", std::nullopt, proof_kernel},
      {"godel-coding", std::nullopt, godel_coding},
      {"interpretation-agreement", std::nullopt, interpretation},
      {"looping-oracle", std::nullopt, looping_oracle},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
    if (c.limit_seconds) {
      timing += " / limit " + std::to_string(static_cast<int>(*c.limit_seconds)) + " s";
      if (secs >= *c.limit_seconds) {
        o.pass = false;
        o.detail += "; over the time limit";
      }
    }
    failed += !o.pass;
    std::printf("%s %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
