#pragma once

#include <optional>
#include <vector>

#include "selprin/natural.hpp"

namespace selprin::oracle {

// Brute-force checks over finite truncations. Nothing here extrapolates past
// the data it is given, and none of it calls into the exact decision code.

using FinSeq = std::vector<Natural>;

enum class HorizonStatus { HoldsAtHorizon, FailsAtHorizon };

struct HorizonVerdict {
  HorizonStatus status = HorizonStatus::FailsAtHorizon;
  Index threshold = 0;  // 1 + last violation, 0 when none
  Index horizon = 0;    // number of positions inspected
  std::optional<Index> counterexample;  // last violation

  bool holds() const { return status == HorizonStatus::HoldsAtHorizon; }
};

/// Scans f(n) ≤ g(n) for n < H. Fails when a violation lies among the last
/// `window` positions.
HorizonVerdict check_le_star_h(const FinSeq& f, const FinSeq& g, Index window = 1);

/// Scans the intervals [g(n), g(n+1)) that lie below f.back() + 1, where all
/// values of f are known. Fails when one of the last `window` of them is
/// missed.
HorizonVerdict check_through_h(const FinSeq& f, const FinSeq& g, Index window = 1);

/// Greedy boundaries: from a, the next boundary is 1 + max over the family of
/// the least element ≥ a. Stops when some member has no known element ≥ a.
/// nullopt when not even one step is possible.
std::optional<FinSeq> greedy_slalom_h(const std::vector<FinSeq>& ys,
                                      const Natural& start);

using Traces = std::vector<std::vector<bool>>;  // traces[n][x]

struct LargeAtHorizon {
  std::vector<Index> multiplicity;
  std::vector<bool> large;  // occurs within the last `window` indices
  Index horizon = 0;
};

LargeAtHorizon check_large_h(const Traces& traces, Index points, Index window);

using FinBlocks = std::vector<std::vector<Index>>;

/// Per point: blocks entirely below traces.size() are inspected in order.
std::vector<HorizonVerdict> check_witness_h(const Traces& traces, Index points,
                                            const FinBlocks& blocks,
                                            Index window = 1);

enum class SearchMode { Consecutive, Arbitrary };

struct FiniteWitness {
  FinBlocks blocks;
  std::vector<Index> thresholds;
};

/// Exhaustive search for an ordered partition of [0, N) into at most
/// `max_blocks` blocks in which every point lies in every block from its
/// threshold on, each threshold leaving at least `min_tail` blocks. Prefers
/// the largest number of blocks. N is traces.size() and must be ≤ 16.
std::optional<FiniteWitness> exhaustive_groupability(
    const Traces& traces, Index points, Index max_blocks, SearchMode mode,
    Index min_tail = 2, Index budget = 20'000'000);

}  // namespace selprin::oracle
