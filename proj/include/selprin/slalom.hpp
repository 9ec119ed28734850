#pragma once

#include <functional>
#include <optional>
#include <string>

#include "selprin/epseq.hpp"
#include "selprin/lazy_seq.hpp"
#include "selprin/partition.hpp"

namespace selprin {

/// The interval system [g(n), g(n+1)) of a strictly increasing boundary g.
struct Slalom {
  LazySeq boundary;
  // Present when the boundary is eventually periodic; enables exact checks.
  std::optional<EPSeq> exact;
  // Slaloms built from a partition: index of the block lying inside
  // interval n.
  std::function<Index(Index)> inner_block;
};

Slalom make_slalom(const EPSeq& boundary);

struct ThroughVerdict {
  bool holds = false;
  Index threshold = 0;
  std::string miss_note;
  bool exact = true;
  Natural horizon = 0;  // value horizon used when not exact
};

ThroughVerdict goes_through(const EPSeq& f, const Slalom& s);
ThroughVerdict goes_through(const EPSeq& f, const EPSeq& boundary);

/// Checks every interval whose right end is ≤ horizon. Never extrapolates.
ThroughVerdict goes_through_at_horizon(const EPSeq& f, const Slalom& s,
                                       const Natural& horizon);

// Bound → slalom: h(0) = g(0), h(n+1) = g(h(n)) + 1.
Slalom slalom_from_bound(const EPSeq& g);

/// Verdict for f against slalom_from_bound(g) when f ≤* g. Every interval n
/// with h(n) ≥ threshold of f ≤* g is met at f(h(n)); the intervals before
/// that point are checked one by one, so the threshold is minimal.
ThroughVerdict through_from_bound(const EPSeq& f, const EPSeq& g,
                                  const Slalom& h);

// Slalom → bound: n ↦ g(2n).
EPSeq bound_from_slalom(const Slalom& s);
LazySeq bound_sequence(const Slalom& s);

/// f ≤* n ↦ g(2n) for an f that goes through s from `through.threshold`.
/// The threshold is minimal.
DominanceVerdict dominated_by_bound(const EPSeq& f, const ThroughVerdict& through,
                                    const Slalom& s);

// Slalom → partition: F_0 = [0, g(1)), F_n = [g(n), g(n+1)).
BlockPartition partition_from_slalom(const Slalom& s);

// Partition → slalom: greedy boundary, g(0) = 0 and g(n) = max F_m + 1 for the
// least m with F_m ∩ [0, g(n-1)) = ∅.
Slalom slalom_from_partition(const BlockPartition& p);

/// Verdict for an f that meets every block F_m with m ≥ block_threshold,
/// against slalom_from_partition of that partition. Minimal threshold.
ThroughVerdict through_from_partition(const EPSeq& f, const Slalom& s,
                                      Index block_threshold);

}  // namespace selprin
