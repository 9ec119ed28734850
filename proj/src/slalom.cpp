#include "selprin/slalom.hpp"

#include <sstream>

#include "selprin/errors.hpp"

namespace selprin {

namespace {

bool meets_interval(const EPSeq& f, const Natural& lo, const Natural& hi) {
  return f(f.first_index_at_least(lo)) < hi;
}

bool meets_interval(const EPSeq& f, const Slalom& s, Index n) {
  return meets_interval(f, s.boundary[n], s.boundary[n + 1]);
}

// Lowers a certified threshold to the minimal one by checking the intervals
// below it directly.
Index tighten(const EPSeq& f, const Slalom& s, Index certified) {
  for (Index n = certified; n-- > 0;)
    if (!meets_interval(f, s, n)) return n + 1;
  return 0;
}

void require_increasing(const EPSeq& f) {
  if (!f.strictly_increasing())
    throw NotIncreasingError("goes_through needs a strictly increasing sequence");
}

}  // namespace

Slalom make_slalom(const EPSeq& boundary) {
  if (!boundary.strictly_increasing())
    throw NotIncreasingError("slalom boundary must be strictly increasing");
  const EPSeq g = normalize(boundary);
  return Slalom{LazySeq::of(g), g, {}};
}

ThroughVerdict goes_through(const EPSeq& f, const Slalom& s) {
  require_increasing(f);
  if (!s.exact)
    throw std::logic_error("exact goes_through needs an eventually periodic boundary");
  const EPSet hits = interval_hits(*s.exact, range_encode(f));
  ThroughVerdict v;
  if (!hits.cofinite()) {
    std::ostringstream os;
    os << "intervals n = " << hits.prefix_length() << " + r (mod "
       << hits.period() << ") are missed for r in {";
    bool first = true;
    for (Index r = 0; r < hits.period(); ++r)
      if (!hits.cycle()[r]) {
        os << (first ? "" : " ") << r;
        first = false;
      }
    os << "}";
    v.miss_note = os.str();
    return v;
  }
  v.holds = true;
  const auto last = hits.last_absent();
  v.threshold = last ? *last + 1 : 0;
  return v;
}

ThroughVerdict goes_through(const EPSeq& f, const EPSeq& boundary) {
  return goes_through(f, make_slalom(boundary));
}

ThroughVerdict goes_through_at_horizon(const EPSeq& f, const Slalom& s,
                                       const Natural& horizon) {
  require_increasing(f);
  ThroughVerdict v;
  v.exact = false;
  v.horizon = horizon;
  std::optional<Index> last_miss;
  Index n = 0;
  for (; s.boundary[n + 1] <= horizon; ++n)
    if (!meets_interval(f, s, n)) last_miss = n;
  v.threshold = last_miss ? *last_miss + 1 : 0;
  v.holds = n > 0 && v.threshold < n;
  if (!v.holds) v.miss_note = "last interval below the horizon is missed";
  return v;
}

Slalom slalom_from_bound(const EPSeq& g) {
  if (!g.strictly_increasing())
    throw NotIncreasingError("slalom_from_bound needs a strictly increasing bound");
  const EPSeq ng = normalize(g);
  LazySeq h([ng](Index n, std::span<const Natural> earlier) -> Natural {
    if (n == 0) return ng(0);
    return ng.at(earlier[n - 1]) + 1;
  });
  return Slalom{h, std::nullopt, {}};
}

ThroughVerdict through_from_bound(const EPSeq& f, const EPSeq& g,
                                  const Slalom& h) {
  require_increasing(f);
  const DominanceVerdict dom = le_star(f, g);
  if (!dom.holds)
    throw std::invalid_argument("through_from_bound needs f ≤* g: " + dom.witness_note);
  Index certified = 0;
  while (h.boundary[certified] < dom.threshold) ++certified;
  ThroughVerdict v;
  v.holds = true;
  v.threshold = tighten(f, h, certified);
  return v;
}

EPSeq bound_from_slalom(const Slalom& s) {
  if (!s.exact)
    throw std::logic_error("bound_from_slalom needs an eventually periodic boundary");
  const EPSeq& g = *s.exact;
  // From index k on, consecutive terms of n ↦ g(2n) differ by a sum of two
  // increments of g, and those pairs cycle with the increment cycle.
  const Index k = g.prefix().size();
  const Index p = g.cycle().size();
  std::vector<Natural> prefix;
  for (Index n = 0; n <= k; ++n) prefix.push_back(g(2 * n));
  std::vector<Natural> steps;
  for (Index i = 0; i < p; ++i) steps.push_back(g(2 * (k + i + 1)) - g(2 * (k + i)));
  return normalize(EPSeq::increments(std::move(prefix), std::move(steps)));
}

LazySeq bound_sequence(const Slalom& s) {
  const LazySeq g = s.boundary;
  return LazySeq([g](Index n, std::span<const Natural>) { return g[2 * n]; });
}

DominanceVerdict dominated_by_bound(const EPSeq& f, const ThroughVerdict& through,
                                    const Slalom& s) {
  if (!through.holds)
    throw std::invalid_argument("dominated_by_bound needs f to go through s");
  // f(n) ≤ f(m0 + n) < g(t + 1 + n) ≤ g(2n) once n ≥ t + 1.
  const Index certified = through.threshold + 1;
  const LazySeq bound = bound_sequence(s);
  DominanceVerdict v;
  v.holds = true;
  for (Index n = certified; n-- > 0;)
    if (f(n) > bound[n]) {
      v.threshold = n + 1;
      return v;
    }
  return v;
}

BlockPartition partition_from_slalom(const Slalom& s) {
  if (s.exact) return BlockPartition::intervals(*s.exact);
  const LazySeq g = s.boundary;
  return BlockPartition::generated(
      EPSet::naturals(),
      [g](Index n) {
        const Index lo = n == 0 ? 0 : to_index(g[n]);
        const Index hi = to_index(g[n + 1]);
        Block b;
        for (Index x = lo; x < hi; ++x) b.push_back(x);
        return b;
      },
      [](Index e) { return e + 1; });
}

namespace {

struct Greedy {
  BlockPartition partition;
  std::vector<Index> chosen;  // chosen[n]: block inside interval n
};

}  // namespace

Slalom slalom_from_partition(const BlockPartition& p) {
  if (!(p.domain() == EPSet::naturals()))
    throw NotAPartitionError("slalom_from_partition needs a partition of all of ℕ");
  auto state = std::make_shared<Greedy>(Greedy{p, {}});
  LazySeq g([state](Index n, std::span<const Natural> earlier) -> Natural {
    if (n == 0) return 0;
    const Natural& floor = earlier[n - 1];
    Index m = state->chosen.empty() ? 0 : state->chosen.back() + 1;
    for (;; ++m) {
      const Block b = state->partition.block(m);
      if (b.empty())
        throw NotAPartitionError("block " + std::to_string(m) + " is empty");
      if (Natural(b.front()) >= floor) {
        state->chosen.push_back(m);
        return Natural(b.back()) + 1;
      }
    }
  });
  auto inner = [state, g](Index n) {
    g[n + 1];
    return state->chosen[n];
  };
  return Slalom{g, std::nullopt, inner};
}

ThroughVerdict through_from_partition(const EPSeq& f, const Slalom& s,
                                      Index block_threshold) {
  require_increasing(f);
  if (!s.inner_block)
    throw std::logic_error("slalom was not built from a partition");
  // inner_block is strictly increasing, so it passes block_threshold by
  // n = block_threshold at the latest.
  Index certified = 0;
  while (s.inner_block(certified) < block_threshold) ++certified;
  ThroughVerdict v;
  v.holds = true;
  v.threshold = tighten(f, s, certified);
  return v;
}

}  // namespace selprin
