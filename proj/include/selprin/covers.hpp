#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "selprin/epset.hpp"
#include "selprin/partition.hpp"

namespace selprin {

using PointSet = boost::dynamic_bitset<>;

/// A finite, nonempty space of named points. Points of the Rothberger space
/// also carry the infinite set they stand for.
struct PointSpace {
  std::vector<std::string> points;
  std::map<std::string, EPSet> realization;

  explicit PointSpace(std::vector<std::string> ids);

  Index size() const { return points.size(); }
  Index index_of(const std::string& id) const;
  PointSet none() const { return PointSet(size()); }
  PointSet all() const { return ~none(); }
  PointSet make_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> names(const PointSet& s) const;
};

/// A countable cover ⟨U_n⟩ of a finite space, given by its traces
/// U_n ∩ X: explicit for n < prefix().size(), cyclic afterwards.
class EPCover {
 public:
  EPCover(PointSpace space, std::vector<PointSet> prefix,
          std::vector<PointSet> cycle);

  const PointSpace& space() const { return space_; }
  const std::vector<PointSet>& prefix() const { return prefix_; }
  const std::vector<PointSet>& cycle() const { return cycle_; }
  Index prefix_length() const { return prefix_.size(); }
  Index period() const { return cycle_.size(); }

  const PointSet& trace(Index n) const;
  // {n : point ∈ U_n}
  EPSet occurrences(Index point) const;

 private:
  PointSpace space_;
  std::vector<PointSet> prefix_;
  std::vector<PointSet> cycle_;
};

struct LargenessReport {
  bool large = true;
  std::vector<bool> per_point;
  std::vector<std::string> finite_multiplicity_points;
  std::vector<Index> finite_multiplicities;  // aligned with the list above
};

LargenessReport is_large(const EPCover& c);

struct TraceClass {
  PointSet trace;  // restricted to the subspace
  EPSet indices;
  bool infinite = false;
};

/// Classes of `idx` under n ~ m iff U_n ∩ sub = U_m ∩ sub, ordered by their
/// least index.
std::vector<TraceClass> equiv_classes(const EPCover& c, const PointSet& sub,
                                      const EPSet& idx);

struct OneStep {
  EPSet infinite_part;  // union of the infinite classes
  PointSet covered;     // sub ∩ ⋃{U_n : n in infinite_part}
  BlockPartition grouping;
  EPSet residual;       // idx minus infinite_part
};

/// One grouping round: gathers the infinite trace classes and groups them
/// diagonally. Throws NotLargeError unless every point of `sub` lies in
/// infinitely many U_n with n ∈ idx.
OneStep onestep(const EPCover& c, const PointSet& sub, const EPSet& idx);

/// ⟨G^i⟩ ↦ ⟨H_n⟩ with H_n = ⋃ {G^i_j : max(i, j) = n}.
BlockPartition merge_partitions(std::vector<BlockPartition> parts);

struct GroupabilityWitness {
  BlockPartition partition;
  std::map<std::string, Index> thresholds;
};

struct RefinementStep {
  EPSet indices;     // B before the step
  PointSet space;    // X after removing what earlier steps covered
  EPSet infinite_part;
  PointSet covered;
};

struct RefinementTrace {
  std::vector<RefinementStep> steps;
  // Steps that grouped something; the last recorded step never does.
  Index productive_steps() const;
};

struct GroupResult {
  GroupabilityWitness witness;
  RefinementTrace trace;
};

/// Groups a large cover. Repeats the one-step grouping on the indices not yet
/// used, over the points not yet covered, until no infinite class is left.
/// The finitely many remaining indices are spread over the first blocks and
/// the step groupings are merged. Thresholds in the witness are minimal.
GroupResult group_cover(const EPCover& c);

struct PointThreshold {
  std::string point;
  std::optional<Index> claimed;
  std::optional<Index> minimal;        // none: infinitely many blocks miss it
  std::optional<Index> failure_index;  // first missing block at or past claimed
  bool ok = false;
};

struct ThresholdReport {
  std::vector<PointThreshold> points;
  bool exact = true;
  Index horizon = 0;  // blocks inspected when not exact
  bool all_ok() const;
};

/// Checks the partition to `horizon`, then every point's claimed threshold:
/// exactly for certified partitions, over `horizon` blocks otherwise.
ThresholdReport verify_witness(const EPCover& c, const GroupabilityWitness& w,
                               Index horizon = 1024);

/// Minimal thresholds of every point against a certified partition; none for
/// points missed by infinitely many blocks.
std::map<std::string, std::optional<Index>> minimal_thresholds(
    const EPCover& c, const BlockPartition& p);

GroupabilityWitness absorb_leftovers(const GroupabilityWitness& w,
                                     const EPSet& leftover);

/// Adds the points `extra` to the space and to every member of the cover.
EPCover extend_to_superspace(const EPCover& c,
                             const std::vector<std::string>& extra);

/// Keeps the thresholds of the points of `space`.
GroupabilityWitness restrict_witness(const GroupabilityWitness& w,
                                     const PointSpace& space);

using PointMap = std::map<std::string, std::string>;

/// Preimage cover along a map from `domain` onto the cover's space.
EPCover pullback_cover(const PointMap& f, const PointSpace& domain,
                       const EPCover& c);

/// Same index partition; the threshold of y is the largest threshold among
/// its preimages.
GroupabilityWitness push_forward_witness(const PointMap& f,
                                         const GroupabilityWitness& w,
                                         const PointSpace& target);

}  // namespace selprin
