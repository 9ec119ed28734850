#pragma once

#include <string>
#include <vector>

#include "selprin/covers.hpp"
#include "selprin/slalom.hpp"

namespace selprin {

/// A finite family of infinite subsets of ℕ, each with a label.
struct FunFamily {
  std::vector<EPSet> members;
  std::vector<std::string> labels;

  FunFamily(std::vector<EPSet> members, std::vector<std::string> labels);
};

/// The cover ⟨O_n⟩ with O_n = {a : n ∈ a}, traced on the family.
EPCover build_rothberger_cover(const FunFamily& y);

struct MemberPartition {
  BlockPartition partition;
  // Least t with a ∩ F_n ≠ ∅ for every n ≥ t, per member.
  std::vector<Index> thresholds;
};

/// Reads a groupability witness of the O_n cover as a partition of ℕ: block
/// n holds exactly the m with O_m in the n-th group.
MemberPartition witness_to_partition(const FunFamily& y,
                                     const GroupabilityWitness& w);

struct SlalomCheck {
  Slalom slalom;
  std::vector<ThroughVerdict> verdicts;
};

SlalomCheck partition_to_slalom_check(const FunFamily& y,
                                      const BlockPartition& p);

struct PipelineReport {
  GroupResult grouping;
  MemberPartition partition;
  Slalom slalom;
  LazySeq bound;
  std::vector<EPSeq> enumerations;
  std::vector<ThroughVerdict> through;
  std::vector<DominanceVerdict> dominance;
  std::vector<std::string> diagnostics;
  bool ok = false;
};

/// cover → grouping → partition of ℕ → slalom → bound, checking at the end
/// that every member goes through the slalom and is dominated by the bound.
PipelineReport b_pipeline(const FunFamily& y);

}  // namespace selprin
