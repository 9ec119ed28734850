// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "selprin/covers.hpp"
#include "selprin/epseq.hpp"
#include "selprin/generate.hpp"
#include "selprin/oracle.hpp"
#include "selprin/rothberger.hpp"
#include "selprin/slalom.hpp"
#include "selprin/text.hpp"

using namespace selprin;
namespace fs = std::filesystem;

namespace {

constexpr Index kHorizon = 10'000;

struct Outcome {
  Index cases = 0;
  std::vector<std::string> failures;
  double limit_seconds = 0;  // 0: no runtime limit

  void fail(std::string what) {
    if (failures.size() < 5) failures.push_back(std::move(what));
    else failures.emplace_back();
  }
};

// Direct term accumulation, independent of EPSeq's closed form. Stops after
// `count` terms or at the first term above `bound`, whichever comes first.
std::vector<Natural> accumulate(const EPSeq& s, Index count, const Natural* bound) {
  std::vector<Natural> out;
  const auto& p = s.prefix();
  const auto& c = s.cycle();
  for (Index n = 0; n < count; ++n) {
    Natural v;
    if (n < p.size())
      v = p[n];
    else if (s.kind() == TailKind::Values)
      v = c[(n - p.size()) % c.size()];
    else
      v = out.back() + c[(n - p.size()) % c.size()];
    if (bound && v > *bound) break;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Natural> terms(const EPSeq& s, Index count) { return accumulate(s, count, nullptr); }

// Increasing sequences only.
std::vector<Natural> terms_through(const EPSeq& s, const Natural& bound) {
  return accumulate(s, ~Index{0}, &bound);
}

oracle::FinSeq members_below(const EPSet& a, Index bound) {
  oracle::FinSeq out;
  for (Index n = 0; n < bound; ++n) {
    const bool in = n < a.prefix().size()
                        ? a.prefix()[n]
                        : a.cycle()[(n - a.prefix().size()) % a.cycle().size()];
    if (in) out.emplace_back(n);
  }
  return out;
}

oracle::Traces traces_of(const EPCover& c, Index n) {
  oracle::Traces t(n, std::vector<bool>(c.space().size()));
  for (Index m = 0; m < n; ++m) {
    const PointSet& s = m < c.prefix_length()
                            ? c.prefix()[m]
                            : c.cycle()[(m - c.prefix_length()) % c.period()];
    for (Index x = 0; x < c.space().size(); ++x) t[m][x] = s[x];
  }
  return t;
}

// An exact threshold t and a horizon scan agree when the scan reports t, or,
// when t lies beyond what was inspected, nothing past the last inspected miss.
bool consistent(Index exact, const oracle::HorizonVerdict& seen) {
  if (exact <= seen.horizon) return seen.threshold == exact;
  return seen.threshold <= exact;
}

Natural magnitude(const Natural& v) { return v < 0 ? Natural(-v) : v; }

Outcome bound_chain() {
  Outcome out{.limit_seconds = 60};
  InstanceGenerator gen(101);
  Index used = 0;
  for (Index tries = 0; used < 1000 && tries < 200'000; ++tries) {
    const EPSeq f = gen.increasing_seq();
    const EPSeq g = gen.increasing_seq();
    if (!le_star(f, g).holds) continue;
    ++used;
    const Slalom h = slalom_from_bound(g);
    const ThroughVerdict v = through_from_bound(f, g, h);
    const auto boundary = h.boundary.take_through(Natural(kHorizon));
    const auto seen = oracle::check_through_h(terms_through(f, boundary.back()), boundary);
    if (!v.holds || !v.exact || !consistent(v.threshold, seen))
      out.fail(render("f", f) + " / " + render("g", g));
  }
  if (used < 1000) out.fail("only " + std::to_string(used) + " dominated pairs generated");

  Index through = 0;
  for (Index tries = 0; through < 1000 && tries < 200'000; ++tries) {
    const EPSeq f = gen.increasing_seq();
    const EPSeq b = gen.increasing_seq();
    if (!goes_through(f, b).holds) continue;
    ++through;
    const EPSeq bound = bound_from_slalom(make_slalom(b));
    const DominanceVerdict d = le_star(f, bound);
    const auto seen = oracle::check_le_star_h(terms(f, kHorizon), terms(bound, kHorizon));
    if (!d.holds || !consistent(to_index(d.threshold), seen))
      out.fail(render("f", f) + " through " + render("s", b));
  }
  if (through < 1000) out.fail("only " + std::to_string(through) + " through pairs generated");
  out.cases = used + through;
  return out;
}

Outcome partition_intervals() {
  Outcome out;
  InstanceGenerator gen(102);
  for (Index i = 0; i < 1000; ++i) {
    const PeriodicShape shape = gen.periodic_partition();
    const Slalom s = slalom_from_partition(shape.build());
    const auto g = s.boundary.take_through(Natural(kHorizon));

    // best[x]: smallest block maximum among blocks whose minimum is >= x.
    std::vector<Index> best(kHorizon + 2, ~Index{0});
    auto note = [&](const Block& b) {
      if (b.front() <= kHorizon) best[b.front()] = std::min(best[b.front()], b.back());
    };
    for (const Block& b : shape.prefix) note(b);
    for (Index k = 0; k * shape.shift <= kHorizon; ++k)
      for (Block b : shape.cycle) {
        for (Index& x : b) x += k * shape.shift;
        note(b);
      }
    for (Index x = kHorizon; x-- > 0;) best[x] = std::min(best[x], best[x + 1]);

    ++out.cases;
    for (Index n = 0; n + 1 < g.size() && g[n + 1] <= kHorizon; ++n) {
      const Index lo = to_index(g[n]);
      if (best[lo] >= to_index(g[n + 1])) {
        out.fail(render("P", shape) + ": interval " + std::to_string(n) + " holds no block");
        break;
      }
    }
  }
  return out;
}

// Index past which f - g repeats up to a constant drift per lcm-period and
// the sign of g - f has settled into that period.
Index dominance_alignment(const EPSeq& f, const EPSeq& g, Index& period) {
  const Index k = std::max(f.prefix().size(), g.prefix().size());
  period = std::lcm(f.cycle().size(), g.cycle().size());
  const auto fv = terms(f, k + 2 * period);
  const auto gv = terms(g, k + 2 * period);
  const Natural drift = (gv[k + period] - fv[k + period]) - (gv[k] - fv[k]);
  if (drift == 0) return k;
  Natural worst = 0;
  for (Index i = 0; i < period; ++i) worst = std::max(worst, magnitude(gv[k + i] - fv[k + i]));
  const Natural d = magnitude(drift);
  return k + period * to_index((worst + d - 1) / d + 1);
}

// Interval index past which the hit pattern of [g(n), g(n+1)) against the
// range of f repeats with the returned period.
Index interval_alignment(const EPSeq& f, const EPSeq& g, Index& period) {
  const Index kf = f.prefix().size(), lf = f.cycle().size();
  const Index kg = g.prefix().size(), lg = g.cycle().size();
  const auto fv = terms(f, kf + lf + 1);
  const auto gv = terms(g, kg + lg + 1);
  const Index t = to_index(fv[kf + lf] - fv[kf]);
  const Index s = to_index(gv[kg + lg] - gv[kg]);
  period = lg * (t / std::gcd(t, s % t));
  const auto below = terms_through(g, fv[kf]);
  Index start = kg;
  while (start < below.size() && below[start] < fv[kf]) ++start;
  return start + 1;
}

Outcome exact_vs_oracle() {
  Outcome out;
  InstanceGenerator gen(103);
  for (Index i = 0; i < 1000; ++i, ++out.cases) {
    const EPSeq f = gen.any_seq();
    const EPSeq g = gen.any_seq();
    Index l = 0;
    const Index h = dominance_alignment(f, g, l) + 4 * l + 64;
    const auto exact = le_star(f, g);
    const auto seen = oracle::check_le_star_h(terms(f, h), terms(g, h), l);
    if (exact.holds != seen.holds() ||
        (exact.holds && to_index(exact.threshold) != seen.threshold))
      out.fail("le-star " + render("f", f) + " / " + render("g", g));
  }
  for (Index i = 0; i < 1000; ++i, ++out.cases) {
    const EPSeq f = gen.increasing_seq();
    const EPSeq g = gen.increasing_seq();
    Index q = 0;
    const Index n = interval_alignment(f, g, q) + 4 * q + 64;
    const auto gv = terms(g, n + 1);
    const auto exact = goes_through(f, g);
    const auto seen = oracle::check_through_h(terms_through(f, gv.back()), gv, q);
    if (exact.holds != seen.holds() || (exact.holds && exact.threshold != seen.threshold))
      out.fail("through " + render("f", f) + " / " + render("g", g));
  }
  for (Index i = 0; i < 1000; ++i, ++out.cases) {
    const EPCover c = gen.cover(5);
    const Index n = c.prefix_length() + 4 * c.period() + 64;
    const auto seen = oracle::check_large_h(traces_of(c, n), c.space().size(), c.period());
    if (is_large(c).per_point != seen.large) out.fail("large " + render("U", c));
  }
  return out;
}

Outcome grouping_engine() {
  Outcome out{.limit_seconds = 120};
  InstanceGenerator gen(104);
  for (Index i = 0; i < 500; ++i, ++out.cases) {
    const EPCover c = gen.large_cover(5);
    if (!is_large(c).large) {
      out.fail("generator produced a cover that is not large: " + render("U", c));
      continue;
    }
    const GroupResult r = group_cover(c);
    const ThresholdReport report = verify_witness(c, r.witness);
    bool finite = report.points.size() == c.space().size();
    for (const auto& p : report.points) finite = finite && p.claimed && p.minimal;
    if (r.trace.steps.size() > c.space().size() + 2 || !report.all_ok() || !finite)
      out.fail(render("U", c));
  }
  for (Index i = 0; i < 100; ++i, ++out.cases) {
    const EPCover c = gen.large_cover(3);
    const Index n = std::clamp<Index>(c.prefix_length() + 2 * c.period(), 8, 12);
    const auto traces = traces_of(c, n);
    const auto w = oracle::exhaustive_groupability(traces, c.space().size(), n,
                                                   oracle::SearchMode::Consecutive);
    if (!w) {
      out.fail("no finite witness for " + render("U", c));
      continue;
    }
    const auto verdicts = oracle::check_witness_h(traces, c.space().size(), w->blocks, 2);
    for (const auto& v : verdicts)
      if (!v.holds()) {
        out.fail("finite witness rejected for " + render("U", c));
        break;
      }
  }
  return out;
}

Outcome round_trips() {
  Outcome out;
  InstanceGenerator gen(105);
  for (Index i = 0; i < 1000; ++i, ++out.cases) {
    const EPSeq f = normalize(gen.bounded_seq());
    const EPSeq g = normalize(gen.increasing_seq());
    const EPSet a = gen.infinite_set();
    if (normalize(undiag(diag_to_increasing(f))) != f) out.fail("undiag∘diag " + render("f", f));
    if (normalize(diag_to_increasing(undiag(g))) != g) out.fail("diag∘undiag " + render("g", g));
    if (normalize(increasing_enum(range_encode(g))) != g) out.fail("enum∘range " + render("g", g));
    if (range_encode(increasing_enum(a)) != a) out.fail("range∘enum " + render("a", a));
  }
  return out;
}

Outcome pipeline() {
  Outcome out;
  InstanceGenerator gen(106);
  for (Index i = 0; i < 200; ++i, ++out.cases) {
    const FunFamily y = gen.family(10);
    const PipelineReport r = b_pipeline(y);
    std::string label = "family of " + std::to_string(y.members.size());
    if (!r.ok) {
      out.fail(label + ": pipeline reported failure");
      continue;
    }
    const auto boundary = r.slalom.boundary.take_through(Natural(kHorizon));
    const oracle::FinSeq bound(r.bound.take_through(Natural(kHorizon)));
    std::vector<oracle::FinSeq> ys;
    bool good = true;
    for (std::size_t k = 0; k < y.members.size(); ++k) {
      ys.push_back(members_below(y.members[k], kHorizon));
      const auto through = oracle::check_through_h(ys.back(), boundary);
      good = good && consistent(r.through[k].threshold, through);
      const auto dom = oracle::check_le_star_h(terms(r.enumerations[k], bound.size()), bound);
      good = good && r.dominance[k].holds && consistent(to_index(r.dominance[k].threshold), dom);
    }
    const auto greedy = oracle::greedy_slalom_h(ys, Natural(0));
    good = good && greedy.has_value();
    if (greedy)
      for (const auto& s : ys) good = good && oracle::check_through_h(s, *greedy).holds();
    if (!good) out.fail(label + ": horizon cross-check failed");
  }
  return out;
}

Outcome transports() {
  Outcome out;
  InstanceGenerator gen(107);
  for (Index i = 0; i < 200; ++i, ++out.cases) {
    const EPCover c = gen.large_cover(4);

    std::vector<std::string> extra;
    for (Index k = 0, m = gen.uniform(1, 3); k < m; ++k) extra.push_back("z" + std::to_string(k));
    const GroupResult wide = group_cover(extend_to_superspace(c, extra));
    const GroupabilityWitness back = restrict_witness(wide.witness, c.space());
    bool good = verify_witness(c, back).all_ok() && back.thresholds.size() == c.space().size();
    for (const auto& [point, t] : back.thresholds)
      good = good && t == wide.witness.thresholds.at(point);

    const auto [domain, f] = gen.surjection_onto(c.space(), gen.uniform(0, 3));
    const EPCover pulled = pullback_cover(f, domain, c);
    for (Index n = 0; n < 64; ++n)
      for (Index x = 0; x < domain.size(); ++x)
        good = good && pulled.trace(n)[x] == c.trace(n)[c.space().index_of(f.at(domain.points[x]))];
    const GroupResult r = group_cover(pulled);
    const GroupabilityWitness pushed = push_forward_witness(f, r.witness, c.space());
    for (const auto& target : c.space().points) {
      Index expected = 0;
      for (const auto& [from, to] : f)
        if (to == target) expected = std::max(expected, r.witness.thresholds.at(from));
      good = good && pushed.thresholds.at(target) == expected;
    }
    good = good && verify_witness(c, pushed).all_ok();
    if (!good) out.fail(render("U", c));
  }
  return out;
}

// Standard output and error of `command`, followed by an "exit N" line unless
// `raw` is set.
std::string capture(const std::string& command, bool raw = false) {
  std::string text;
  const std::string line = raw ? command : command + " 2>&1; echo \"exit $?\"";
  FILE* pipe = popen(line.c_str(), "r");
  if (!pipe) return "popen failed";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  pclose(pipe);
  return text;
}

Outcome cli_determinism() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "selprin-acceptance";
  fs::create_directories(dir);
  const std::string cli = SELPRIN_CLI;

  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  auto generated = [&](const std::string& name, const std::string& args) {
    return write(name, capture(cli + " " + args, true));
  };
  const std::string seqs = generated("seqs.txt", "--seed 11 gen --kind increasing --count 2");
  const std::string covers = generated("covers.txt", "--seed 12 gen --kind cover --count 2");
  const std::string families = generated("families.txt", "--seed 13 gen --kind family");
  const std::string parts = generated("parts.txt", "--seed 14 gen --kind partition");
  const std::string directive =
      write("run.txt", "epseq f = prefix 1 ; inc-cycle 3\nepseq g = prefix 0 ; inc-cycle 2\n"
                       "run check le-star f g\n");

  std::vector<std::string> commands;
  for (const char* kind : {"epseq", "increasing", "epset", "cover", "family", "partition"})
    for (const char* seed : {"1", "7", "99"})
      commands.push_back(cli + " --seed " + seed + " gen --kind " + kind + " --count 3");
  for (const char* what : {"normalize", "range", "undiag", "slalom-from-bound", "bound-from-slalom"})
    commands.push_back(cli + " --horizon 300 convert " + seqs + " " + what + " s0");
  commands.push_back(cli + " check " + seqs + " le-star s0 s1");
  commands.push_back(cli + " check " + seqs + " through s0 s1");
  commands.push_back(cli + " check " + covers + " large U0");
  commands.push_back(cli + " group " + covers + " U1");
  commands.push_back(cli + " --horizon 500 pipeline " + families + " --emit all");
  commands.push_back(cli + " --horizon 300 convert " + parts + " slalom-from-partition P0");
  commands.push_back(cli + " --horizon 300 oracle " + families + " greedy F0");
  commands.push_back(cli + " --horizon 200 oracle " + seqs + " le-star s0 s1");
  commands.push_back(cli + " --seed 5 oracle crosscheck --count 100");
  commands.push_back(cli + " run " + directive);

  for (const auto& command : commands) {
    ++out.cases;
    const std::string first = capture(command);
    const std::string second = capture(command);
    if (first != second) out.fail(command);
    if (first.ends_with("exit 2\n")) out.fail("input error from " + command);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments restrict the run to the listed criterion numbers.
  const std::vector<std::string> only(argv + 1, argv + argc);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 bound and slalom chain", bound_chain},
      {"2 partition intervals hold whole blocks", partition_intervals},
      {"3 exact checks agree with horizon oracles", exact_vs_oracle},
      {"4 grouping engine", grouping_engine},
      {"5 encoding round trips", round_trips},
      {"6 family pipeline", pipeline},
      {"7 witness transport", transports},
      {"8 CLI determinism", cli_determinism},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), name.substr(0, 1)) == only.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = o.limit_seconds > 0 && secs >= o.limit_seconds;
    const bool pass = o.failures.empty() && !slow;
    all = all && pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (pass ? "PASS" : "FAIL") << "  criterion " << name << "  cases "
         << o.cases << "  failures " << o.failures.size() << "  " << secs << " s";
    if (o.limit_seconds > 0) line << " (limit " << o.limit_seconds << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& f : o.failures)
      if (!f.empty()) std::cout << "      " << f << "\n";
  }
  return all ? 0 : 1;
}
