#include "selprin/oracle.hpp"

#include <algorithm>

#include "selprin/errors.hpp"

namespace selprin::oracle {

namespace {

HorizonVerdict summarize(std::optional<Index> last_violation, Index horizon,
                         Index window) {
  HorizonVerdict v;
  v.horizon = horizon;
  v.counterexample = last_violation;
  v.threshold = last_violation ? *last_violation + 1 : 0;
  const bool late = last_violation && *last_violation + window >= horizon;
  v.status = late || horizon == 0 ? HorizonStatus::FailsAtHorizon
                                  : HorizonStatus::HoldsAtHorizon;
  return v;
}

bool covers_point(const Traces& traces, const std::vector<Index>& block, Index x) {
  return std::any_of(block.begin(), block.end(),
                     [&](Index k) { return traces[k][x]; });
}

}  // namespace

HorizonVerdict check_le_star_h(const FinSeq& f, const FinSeq& g, Index window) {
  if (f.size() != g.size())
    throw HorizonMismatch("sequences have different horizons");
  std::optional<Index> last;
  for (Index n = 0; n < f.size(); ++n)
    if (f[n] > g[n]) last = n;
  return summarize(last, f.size(), window);
}

HorizonVerdict check_through_h(const FinSeq& f, const FinSeq& g, Index window) {
  if (f.empty() || g.size() < 2)
    throw HorizonMismatch("not enough terms to form an interval");
  const Natural known = f.back() + 1;
  std::optional<Index> last;
  Index n = 0;
  auto it = f.begin();
  for (; n + 1 < g.size() && g[n + 1] <= known; ++n) {
    it = std::lower_bound(it, f.end(), g[n]);
    if (it == f.end() || *it >= g[n + 1]) last = n;
  }
  if (n == 0) throw HorizonMismatch("no interval lies below the known range");
  return summarize(last, n, window);
}

std::optional<FinSeq> greedy_slalom_h(const std::vector<FinSeq>& ys,
                                      const Natural& start) {
  if (ys.empty()) throw EmptyFamily("greedy slalom needs at least one sequence");
  FinSeq boundary{start};
  for (;;) {
    Natural top = -1;
    for (const auto& y : ys) {
      auto it = std::lower_bound(y.begin(), y.end(), boundary.back());
      if (it == y.end()) {
        if (boundary.size() < 2) return std::nullopt;
        return boundary;
      }
      top = std::max(top, *it);
    }
    boundary.push_back(top + 1);
  }
}

LargeAtHorizon check_large_h(const Traces& traces, Index points, Index window) {
  LargeAtHorizon r;
  r.horizon = traces.size();
  r.multiplicity.assign(points, 0);
  r.large.assign(points, false);
  for (Index n = 0; n < traces.size(); ++n)
    for (Index x = 0; x < points; ++x)
      if (traces[n][x]) {
        ++r.multiplicity[x];
        if (n + window >= traces.size()) r.large[x] = true;
      }
  return r;
}

std::vector<HorizonVerdict> check_witness_h(const Traces& traces, Index points,
                                            const FinBlocks& blocks, Index window) {
  Index usable = 0;
  while (usable < blocks.size() &&
         std::all_of(blocks[usable].begin(), blocks[usable].end(),
                     [&](Index k) { return k < traces.size(); }))
    ++usable;
  std::vector<HorizonVerdict> out;
  for (Index x = 0; x < points; ++x) {
    std::optional<Index> last;
    for (Index n = 0; n < usable; ++n)
      if (!covers_point(traces, blocks[n], x)) last = n;
    out.push_back(summarize(last, usable, window));
  }
  return out;
}

namespace {

struct Search {
  const Traces& traces;
  Index points;
  Index min_tail;
  Index budget;
  Index visited = 0;

  void tick() {
    if (++visited > budget)
      throw SearchBudgetExceeded("exhaustive search exceeded its node budget");
  }

  bool full(const std::vector<Index>& block) const {
    for (Index x = 0; x < points; ++x)
      if (!covers_point(traces, block, x)) return false;
    return true;
  }

  // Thresholds in the given order; nullopt if some point leaves fewer than
  // min_tail trailing blocks.
  std::optional<std::vector<Index>> thresholds(const FinBlocks& blocks) const {
    std::vector<Index> t(points, 0);
    for (Index x = 0; x < points; ++x) {
      for (Index n = blocks.size(); n-- > 0;)
        if (!covers_point(traces, blocks[n], x)) {
          t[x] = n + 1;
          break;
        }
      if (t[x] + min_tail > blocks.size()) return std::nullopt;
    }
    return t;
  }

  std::optional<FiniteWitness> consecutive(Index r) {
    const Index n = traces.size();
    std::vector<Index> cuts;  // r-1 cut positions in 1..n-1
    std::optional<FiniteWitness> found;
    auto recurse = [&](auto&& self, Index from) -> bool {
      tick();
      if (cuts.size() + 1 == r) {
        FinBlocks blocks;
        Index lo = 0;
        for (Index c : cuts) {
          blocks.emplace_back();
          for (Index k = lo; k < c; ++k) blocks.back().push_back(k);
          lo = c;
        }
        blocks.emplace_back();
        for (Index k = lo; k < n; ++k) blocks.back().push_back(k);
        if (auto t = thresholds(blocks)) {
          found = FiniteWitness{std::move(blocks), std::move(*t)};
          return true;
        }
        return false;
      }
      for (Index c = from; c < n; ++c) {
        cuts.push_back(c);
        if (self(self, c + 1)) return true;
        cuts.pop_back();
      }
      return false;
    };
    recurse(recurse, 1);
    return found;
  }

  std::optional<FiniteWitness> arbitrary(Index r) {
    const Index n = traces.size();
    std::vector<Index> label(n);
    Index used = 0;
    std::optional<FiniteWitness> found;
    // Restricted growth strings: element k joins an existing block or opens
    // the next one.
    auto recurse = [&](auto&& self, Index k) -> bool {
      tick();
      if (used + (n - k) < r) return false;
      if (k == n) {
        if (used != r) return false;
        FinBlocks blocks(r);
        for (Index i = 0; i < n; ++i) blocks[label[i]].push_back(i);
        // Full blocks go last; that ordering is optimal for the thresholds.
        std::stable_partition(blocks.begin(), blocks.end(),
                              [&](const auto& b) { return !full(b); });
        if (auto t = thresholds(blocks)) {
          found = FiniteWitness{std::move(blocks), std::move(*t)};
          return true;
        }
        return false;
      }
      for (Index b = 0; b <= used && b < r; ++b) {
        label[k] = b;
        const bool opened = b == used;
        if (opened) ++used;
        if (self(self, k + 1)) return true;
        if (opened) --used;
      }
      return false;
    };
    recurse(recurse, 0);
    return found;
  }
};

}  // namespace

std::optional<FiniteWitness> exhaustive_groupability(const Traces& traces,
                                                     Index points, Index max_blocks,
                                                     SearchMode mode, Index min_tail,
                                                     Index budget) {
  if (traces.size() > 16)
    throw SearchBudgetExceeded("exhaustive search is limited to 16 indices");
  // A point must lie in at least min_tail distinct blocks.
  for (Index x = 0; x < points; ++x) {
    Index count = 0;
    for (const auto& t : traces) count += t[x];
    if (count < min_tail) return std::nullopt;
  }
  Search search{traces, points, min_tail, budget};
  const Index top = std::min<Index>(max_blocks, traces.size());
  for (Index r = top; r >= std::max<Index>(min_tail, 1); --r) {
    auto found = mode == SearchMode::Consecutive ? search.consecutive(r)
                                                 : search.arbitrary(r);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace selprin::oracle
