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

#include "pwb/goodstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwb/error.hpp"

namespace pwb {

using Segment = HereditaryRep::Segment;

struct RepAccess {
  static HereditaryRep make(std::vector<Segment> segments) {
    HereditaryRep rep;
    rep.segments_ = std::move(segments);
    return rep;
  }
};

namespace {

std::strong_ordering cmp(const Natural& a, const Natural& b) {
  int c = mpz_cmp(a.get_mpz_t(), b.get_mpz_t());
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Segment term_segment(HereditaryRep exponent, Natural coef) {
  Segment s;
  s.kind = Segment::Kind::Term;
  s.coef = std::move(coef);
  s.exponent = std::make_shared<const HereditaryRep>(std::move(exponent));
  return s;
}

Segment run_segment(Natural radix, Natural lo, Natural hi, Natural coef) {
  Segment s;
  s.kind = Segment::Kind::Run;
  s.coef = std::move(coef);
  s.radix = std::move(radix);
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

void require_base(const Natural& base) {
  if (base < 2) throw Error(ErrorCode::BadBase, "base must be at least 2, got " + to_decimal(base));
}

// Walks the expanded terms of a representation without materialising runs.
class TermCursor {
 public:
  explicit TermCursor(const std::vector<Segment>& segs) : segs_(segs) { enter(); }

  bool done() const { return idx_ >= segs_.size(); }
  const Segment& seg() const { return segs_[idx_]; }
  bool in_run() const { return seg().kind == Segment::Kind::Run; }
  const Natural& j() const { return j_; }
  const Natural& coef() const { return seg().coef; }
  bool at_segment_start() const { return !in_run() || j_ + 1 == seg().hi; }
  // Terms left in the current segment, including the current one.
  Natural remaining() const { return in_run() ? Natural(j_ - seg().lo + 1) : Natural(1); }

  HereditaryRep exponent() const { return in_run() ? hbr(j_, seg().radix) : *seg().exponent; }

  void advance(const Natural& n = 1) {
    if (in_run()) {
      j_ -= n;
      if (j_ >= seg().lo) return;
    }
    ++idx_;
    enter();
  }
  void skip_segment() {
    ++idx_;
    enter();
  }

 private:
  void enter() {
    if (!done() && in_run()) j_ = seg().hi - 1;
  }

  const std::vector<Segment>& segs_;
  std::size_t idx_ = 0;
  Natural j_;
};

bool segment_equal(const Segment& a, const Segment& b) {
  if (a.kind != b.kind || a.coef != b.coef) return false;
  if (a.kind == Segment::Kind::Run) return a.radix == b.radix && a.lo == b.lo && a.hi == b.hi;
  return a.exponent == b.exponent || compare_shapes(*a.exponent, *b.exponent) == 0;
}

double log2_of(const Natural& n) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

Natural exact_value(const HereditaryRep& rep, const Natural& base);

// The value of an exponent as a double, or +inf once it cannot matter.
// Exact below the double range, so bounds do not compound up a tower.
double value_bound(const HereditaryRep& rep, const Natural& base) {
  if (rep.is_zero()) return 0;
  if (hbr_log2_bound(rep, base) > 1100) return std::numeric_limits<double>::infinity();
  return exact_value(rep, base).get_d();
}

Natural exact_value(const HereditaryRep& rep, const Natural& base) {
  Natural total = 0, power;
  auto add_term = [&](const HereditaryRep& exponent, const Natural& coef) {
    Natural e = exact_value(exponent, base);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(to_u64(e)));
    total += coef * power;
  };
  for (const Segment& s : rep.segments()) {
    if (s.kind == Segment::Kind::Term) {
      add_term(*s.exponent, s.coef);
    } else {
      for (Natural j = s.lo; j < s.hi; ++j) add_term(hbr(j, s.radix), s.coef);
    }
  }
  return total;
}

// The segments of `rep` with the lowest term split out of a trailing run.
std::vector<Segment> split_lowest(const HereditaryRep& rep) {
  std::vector<Segment> segs = rep.segments();
  if (!segs.empty() && segs.back().kind == Segment::Kind::Run) {
    Segment run = segs.back();
    segs.pop_back();
    if (run.lo + 1 < run.hi) segs.push_back(run_segment(run.radix, run.lo + 1, run.hi, run.coef));
    segs.push_back(term_segment(hbr(run.lo, run.radix), run.coef));
  }
  return segs;
}

struct RawStep {
  std::vector<Segment> before;  // split form of the input
  std::vector<Segment> after;   // the step result
  std::size_t shared;           // leading segments common to both
  StepBranch branch;
};

RawStep raw_step(const HereditaryRep& rep, const Natural& base) {
  require_base(base);
  if (rep.is_zero()) throw Error(ErrorCode::ZeroTerm, "the sequence has already reached 0");
  RawStep out;
  out.before = split_lowest(rep);
  out.after = out.before;
  out.shared = out.before.size() - 1;
  Segment last = out.after.back();
  out.after.pop_back();
  const Natural next = base + 1;
  if (last.exponent->is_zero()) {
    out.branch = StepBranch::Decrement;
    if (last.coef > 1) out.after.push_back(term_segment(HereditaryRep(), last.coef - 1));
  } else {
    out.branch = StepBranch::Borrow;
    // c*B^e - 1 = (c-1)*B^e + sum_{j<E} (B-1)*B^j with E = e(B).
    std::optional<Natural> e = try_hbr_value(*last.exponent, next, 1 << 20);
    if (!e) throw Error(ErrorCode::TooLarge, "borrow exponent is too large to expand");
    if (last.coef > 1) out.after.push_back(term_segment(*last.exponent, last.coef - 1));
    out.after.push_back(run_segment(next, 0, *e, next - 1));
  }
  return out;
}

std::string atom(const std::string& s) {
  bool simple = s == "w" || s.find_first_not_of("0123456789") == std::string::npos;
  return simple ? s : "(" + s + ")";
}

// Shared printer: `base` is the text of the base symbol.
template <typename Exponent>
std::string print_terms(const HereditaryRep& rep, const std::string& base, std::size_t max_terms,
                        Exponent exponent_text) {
  if (rep.is_zero()) return "0";
  std::string out;
  std::size_t count = 0;
  for (TermCursor c(rep.segments()); !c.done(); c.advance()) {
    if (count == max_terms) {
      out += "+...";
      break;
    }
    if (count++) out += '+';
    HereditaryRep e = c.exponent();
    const std::string coef = to_decimal(c.coef());
    if (e.is_zero()) {
      out += coef;
      continue;
    }
    std::string power = base;
    std::string et = exponent_text(e);
    if (et != "1") power += "^" + atom(et);
    out += base == "w" ? (c.coef() > 1 ? power + "*" + coef : power)
                       : (c.coef() > 1 ? coef + "*" + power : power);
  }
  return out;
}

}  // namespace

// --- HereditaryRep --------------------------------------------------------------

HereditaryRep HereditaryRep::from_terms(std::vector<std::pair<HereditaryRep, Natural>> terms) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].second < 1) {
      throw Error(ErrorCode::InvalidArgument, "coefficients must be positive");
    }
    if (i > 0 && compare_shapes(terms[i - 1].first, terms[i].first) != std::strong_ordering::greater) {
      throw Error(ErrorCode::InvalidArgument, "exponents must strictly decrease");
    }
  }
  for (auto& [e, c] : terms) segs.push_back(term_segment(std::move(e), std::move(c)));
  return RepAccess::make(std::move(segs));
}

Natural HereditaryRep::term_count() const {
  Natural n = 0;
  for (const Segment& s : segments_) n += s.kind == Segment::Kind::Run ? Natural(s.hi - s.lo) : Natural(1);
  return n;
}

std::vector<std::pair<HereditaryRep, Natural>> HereditaryRep::terms(std::size_t limit) const {
  if (term_count() > from_u64(limit)) {
    throw Error(ErrorCode::TooLarge, "representation has " + to_decimal(term_count()) + " terms");
  }
  std::vector<std::pair<HereditaryRep, Natural>> out;
  for (TermCursor c(segments_); !c.done(); c.advance()) out.emplace_back(c.exponent(), c.coef());
  return out;
}

bool operator==(const HereditaryRep& a, const HereditaryRep& b) {
  return compare_shapes(a, b) == std::strong_ordering::equal;
}

HereditaryRep hbr(const Natural& m, const Natural& base) {
  require_base(base);
  if (sgn(m) < 0) throw Error(ErrorCode::InvalidArgument, "hbr of a negative number");
  std::vector<std::pair<std::uint64_t, Natural>> digits;
  Natural rest = m, digit;
  for (std::uint64_t pos = 0; rest > 0; ++pos) {
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    if (digit != 0) digits.emplace_back(pos, digit);
  }
  std::vector<Segment> segs;
  segs.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    segs.push_back(term_segment(hbr(from_u64(it->first), base), it->second));
  }
  return RepAccess::make(std::move(segs));
}

double hbr_log2_bound(const HereditaryRep& rep, const Natural& base) {
  if (rep.is_zero()) return -std::numeric_limits<double>::infinity();
  // Distinct powers with coefficients <= c sum to less than 2*c*B^e.
  Natural c = 0;
  for (const Segment& s : rep.segments()) c = std::max(c, s.coef);
  const Segment& top = rep.segments().front();
  double e = top.kind == Segment::Kind::Term ? value_bound(*top.exponent, base)
                                             : value_bound(hbr(top.hi - 1, top.radix), base);
  return 1 + log2_of(c) + e * log2_of(base) * (1 + 1e-12);
}

std::optional<Natural> try_hbr_value(const HereditaryRep& rep, const Natural& base,
                                     std::size_t max_bits) {
  require_base(base);
  if (rep.is_zero()) return Natural(0);
  if (hbr_log2_bound(rep, base) > 2.0 * static_cast<double>(max_bits) + 64) return std::nullopt;
  Natural v = exact_value(rep, base);
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits) return std::nullopt;
  return v;
}

Natural hbr_value(const HereditaryRep& rep, const Natural& base, std::size_t max_bits) {
  std::optional<Natural> v = try_hbr_value(rep, base, max_bits);
  if (!v) {
    throw Error(ErrorCode::TooLarge,
                "value exceeds " + std::to_string(max_bits) + " bits at base " + to_decimal(base));
  }
  return *v;
}

std::string to_string(const HereditaryRep& rep, const Natural& base, std::size_t max_terms) {
  const std::string b = to_decimal(base);
  return print_terms(rep, b, max_terms,
                     [&](const HereditaryRep& e) { return to_string(e, base, max_terms); });
}

// --- Goodstein ---------------------------------------------------------------------

StepResult goodstein_step(const HereditaryRep& rep, const Natural& base, std::size_t value_bits) {
  RawStep raw = raw_step(rep, base);
  StepResult out{RepAccess::make(std::move(raw.after)), raw.branch, std::nullopt};
  if (value_bits > 0) out.value = try_hbr_value(out.rep, base + 1, value_bits);
  return out;
}

GoodsteinTrace goodstein_sequence(const Natural& m, std::uint64_t max_steps, std::size_t value_bits) {
  GoodsteinTrace trace;
  trace.start = m;
  GoodsteinEntry first{1, Natural(2), std::nullopt, hbr(m, 2)};
  if (value_bits > 0) first.value = m;
  trace.entries.push_back(std::move(first));
  for (std::uint64_t k = 0; k < max_steps && !trace.entries.back().rep.is_zero(); ++k) {
    const GoodsteinEntry& prev = trace.entries.back();
    StepResult next = goodstein_step(prev.rep, prev.base, value_bits);
    trace.entries.push_back({prev.step + 1, prev.base + 1, std::move(next.value), std::move(next.rep)});
  }
  trace.terminated = trace.entries.back().rep.is_zero();
  return trace;
}

ZDiff z_substituted_diff(const HereditaryRep& rep, const Natural& base, const Natural& z,
                         std::size_t max_bits) {
  if (z <= base) {
    throw Error(ErrorCode::BadBound,
                "z = " + to_decimal(z) + " must exceed the base " + to_decimal(base));
  }
  RawStep raw = raw_step(rep, base);
  ZDiff out;
  out.branch = raw.branch;
  HereditaryRep old_tail = RepAccess::make({raw.before.begin() + raw.shared, raw.before.end()});
  HereditaryRep new_tail = RepAccess::make({raw.after.begin() + raw.shared, raw.after.end()});
  auto order = compare_shapes(old_tail, new_tail);
  out.sign = order == 0 ? 0 : order > 0 ? 1 : -1;
  auto a = try_hbr_value(old_tail, z, max_bits);
  auto b = a ? try_hbr_value(new_tail, z, max_bits) : std::nullopt;
  if (a && b) out.exact = *a - *b;
  return out;
}

// --- ordinals --------------------------------------------------------------------------

CnfOrdinal CnfOrdinal::finite(const Natural& n) {
  if (n == 0) return CnfOrdinal();
  return CnfOrdinal(RepAccess::make({term_segment(HereditaryRep(), n)}));
}

CnfOrdinal CnfOrdinal::omega() {
  return CnfOrdinal(RepAccess::make({term_segment(finite(1).shape(), 1)}));
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<std::pair<CnfOrdinal, Natural>> terms) {
  std::vector<std::pair<HereditaryRep, Natural>> shapes;
  shapes.reserve(terms.size());
  for (auto& [o, c] : terms) shapes.emplace_back(o.shape(), std::move(c));
  return CnfOrdinal(HereditaryRep::from_terms(std::move(shapes)));
}

CnfOrdinal mirror_ordinal(const HereditaryRep& rep) { return CnfOrdinal(rep); }

std::strong_ordering compare_shapes(const HereditaryRep& a, const HereditaryRep& b) {
  TermCursor x(a.segments()), y(b.segments());
  while (!x.done() && !y.done()) {
    if (x.at_segment_start() && y.at_segment_start() && segment_equal(x.seg(), y.seg())) {
      x.skip_segment();
      y.skip_segment();
      continue;
    }
    const bool aligned = x.in_run() && y.in_run() && x.seg().radix == y.seg().radix;
    if (aligned && x.j() == y.j()) {
      if (auto c = cmp(x.coef(), y.coef()); c != 0) return c;
      Natural n = std::min(x.remaining(), y.remaining());
      x.advance(n);
      y.advance(n);
      continue;
    }
    // hbr(., radix) is order preserving, so aligned runs compare by j.
    auto c = aligned ? cmp(x.j(), y.j()) : compare_shapes(x.exponent(), y.exponent());
    if (c != 0) return c;
    if (c = cmp(x.coef(), y.coef()); c != 0) return c;
    x.advance();
    y.advance();
  }
  if (!x.done()) return std::strong_ordering::greater;
  if (!y.done()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
  return compare_shapes(a.shape(), b.shape());
}

std::string to_string(const CnfOrdinal& o, std::size_t max_terms) {
  return print_terms(o.shape(), "w", max_terms,
                     [&](const HereditaryRep& e) { return to_string(CnfOrdinal(e), max_terms); });
}

bool descent_check(const GoodsteinTrace& trace) {
  if (trace.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty trace");
  for (std::size_t k = 0; k + 1 < trace.entries.size(); ++k) {
    if (trace.entries[k].rep.is_zero()) continue;
    if (compare_shapes(trace.entries[k + 1].rep, trace.entries[k].rep) != std::strong_ordering::less) {
      return false;
    }
  }
  return true;
}

}  // namespace pwb
