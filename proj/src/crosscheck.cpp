#include "selprin/crosscheck.hpp"

#include <numeric>

#include "selprin/covers.hpp"
#include "selprin/generate.hpp"
#include "selprin/oracle.hpp"
#include "selprin/slalom.hpp"
#include "selprin/text.hpp"

namespace selprin {

namespace {

Natural abs_value(const Natural& v) { return v < 0 ? Natural(-v) : v; }

Natural ceil_div(const Natural& a, const Natural& b) { return (a + b - 1) / b; }

// Past this index f - g repeats every L steps up to a constant drift, and
// once the drift has overtaken every aligned difference the sign pattern is
// periodic.
Index le_star_alignment(const EPSeq& f, const EPSeq& g, Index& period) {
  const Index k = std::max(f.prefix().size(), g.prefix().size());
  const Index l = lcm_index(f.cycle().size(), g.cycle().size());
  period = l;
  const Natural drift = g(k + l) - g(k) - (f(k + l) - f(k));
  if (drift == 0) return k;
  Natural worst = 0;
  for (Index i = 0; i < l; ++i) worst = std::max(worst, abs_value(g(k + i) - f(k + i)));
  return k + l * to_index(ceil_div(worst, abs_value(drift)) + 1);
}

// Past this interval index the hit pattern of [g(n), g(n+1)) against the
// range of f is periodic with period `period`.
Index through_alignment(const EPSeq& f, const EPSeq& g, Index& period) {
  const Index kf = f.prefix().size();
  const Index kg = g.prefix().size();
  const Index lf = f.cycle().size();
  const Index lg = g.cycle().size();
  const Index t = to_index(f(kf + lf) - f(kf));  // range period
  const Index s = to_index(g(kg + lg) - g(kg));
  period = lg * (t / std::gcd(t, s % t));
  Index start = kg;
  while (g(start) < f(kf)) ++start;
  return start + 1;
}

std::string verdict_text(bool holds, Index t) {
  return holds ? "holds from " + std::to_string(t) : "fails";
}

}  // namespace

std::vector<AgreementTally> cross_check(std::uint64_t seed, Index count) {
  InstanceGenerator gen(seed);
  AgreementTally le{"le-star", 0, {}}, through{"through", 0, {}}, large{"large", 0, {}};

  for (Index i = 0; i < count; ++i) {
    const EPSeq f = gen.any_seq();
    const EPSeq g = gen.any_seq();
    Index l = 0;
    const Index h = le_star_alignment(f, g, l) + 4 * l + 64;
    const auto exact = le_star(f, g);
    const auto seen = oracle::check_le_star_h(f.take(h), g.take(h), l);
    if (exact.holds == seen.holds() &&
        (!exact.holds || to_index(exact.threshold) == seen.threshold))
      ++le.agree;
    else
      le.disagreements.push_back(render("f", f) + " / " + render("g", g) + ": exact " +
                                 verdict_text(exact.holds, to_index(exact.threshold)) +
                                 ", oracle " + verdict_text(seen.holds(), seen.threshold));
  }

  for (Index i = 0; i < count; ++i) {
    const EPSeq f = gen.increasing_seq();
    const EPSeq g = gen.increasing_seq();
    Index q = 0;
    const Index n = through_alignment(f, g, q) + 4 * q + 64;
    const auto exact = goes_through(f, g);
    const auto seen = oracle::check_through_h(f.take_through(g(n)), g.take(n + 1), q);
    if (exact.holds == seen.holds() && (!exact.holds || exact.threshold == seen.threshold))
      ++through.agree;
    else
      through.disagreements.push_back(
          render("f", f) + " / " + render("g", g) + ": exact " +
          verdict_text(exact.holds, exact.threshold) + ", oracle " +
          verdict_text(seen.holds(), seen.threshold));
  }

  for (Index i = 0; i < count; ++i) {
    const EPCover c = gen.cover(5);
    const Index n = c.prefix_length() + 4 * c.period() + 64;
    oracle::Traces traces(n, std::vector<bool>(c.space().size()));
    for (Index m = 0; m < n; ++m)
      for (Index x = 0; x < c.space().size(); ++x) traces[m][x] = c.trace(m)[x];
    const auto exact = is_large(c);
    const auto seen = oracle::check_large_h(traces, c.space().size(), c.period());
    if (exact.per_point == seen.large)
      ++large.agree;
    else
      large.disagreements.push_back(render("U", c) + ": per-point largeness differs");
  }
  return {le, through, large};
}

}  // namespace selprin
