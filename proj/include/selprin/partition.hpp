#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "selprin/epseq.hpp"
#include "selprin/epset.hpp"

namespace selprin {

using Block = std::vector<Index>;  // sorted, no duplicates

/// A partition of an eventually periodic domain D ⊆ ℕ into finite blocks
/// F_0, F_1, …, produced on demand.
///
/// Partitions are built from a handful of shapes. All shapes except
/// `generated` carry enough structure to be certified: for any eventually
/// periodic target T, the set {n : F_n ∩ T ≠ ∅} is computed exactly by
/// `hit_pattern`. Generated partitions can only be checked to a horizon.
class BlockPartition {
 public:
  /// No blocks at all (every F_n empty) over the empty domain.
  static BlockPartition empty();

  /// Diagonal grouping of the given infinite classes: F_k holds the
  /// (k-i)-th element of class i for every i ≤ k.
  static BlockPartition diagonal(std::vector<EPSet> classes);

  /// Interval blocks of a strictly increasing boundary b: F_0 = [0, b(1)),
  /// F_n = [b(n), b(n+1)) for n ≥ 1.
  static BlockPartition intervals(const EPSeq& boundary);

  /// Explicit leading blocks followed by `cycle` blocks repeated forever,
  /// every element moving up by `shift` on each repetition.
  static BlockPartition periodic(std::vector<Block> prefix,
                                 std::vector<Block> cycle, Index shift);

  /// H_n = ⋃ {G^i_j : max(i, j) = n}. Domains must already be disjoint.
  static BlockPartition merged(std::vector<BlockPartition> parts);

  /// Block n of `base` plus the n-th element of `leftover`.
  static BlockPartition absorbed(BlockPartition base, EPSet leftover);

  /// Arbitrary generator. `block_bound(E)` must return a block count B such
  /// that every domain element below E lies in one of F_0..F_{B-1}.
  static BlockPartition generated(EPSet domain,
                                  std::function<Block(Index)> block,
                                  std::function<Index(Index)> block_bound);

  const EPSet& domain() const;
  Block block(Index n) const;
  std::vector<Block> blocks(Index count) const;
  Index block_bound(Index element_bound) const;

  bool certified() const;
  std::string shape() const;

  /// {n : F_n ∩ target ≠ ∅}. Requires a certified partition.
  EPSet hit_pattern(const EPSet& target) const;
  /// Same information for the first `count` blocks, by materialization.
  std::vector<bool> hit_prefix(const EPSet& target, Index count) const;

  /// Throws NotAPartitionError unless blocks are pairwise disjoint, lie in
  /// the domain, and every domain element below `horizon` is covered.
  void check(Index horizon) const;

  struct Node;

 private:
  explicit BlockPartition(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// {n : [b(n), b(n+1)) ∩ target ≠ ∅} for a strictly increasing b.
EPSet interval_hits(const EPSeq& boundary, const EPSet& target);

/// Partitions with equal first `count` blocks and equal domains.
bool same_blocks(const BlockPartition& a, const BlockPartition& b, Index count);

}  // namespace selprin
