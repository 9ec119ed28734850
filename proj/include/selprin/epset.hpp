#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "selprin/natural.hpp"

namespace selprin {

/// A subset of ℕ whose characteristic sequence is eventually periodic:
/// `prefix` gives membership of 0..k-1, and `cycle` repeats from k on.
///
/// Instances are always kept in canonical form (minimal cycle, then minimal
/// prefix), so structural equality coincides with set equality.
class EPSet {
 public:
  EPSet(std::vector<bool> prefix, std::vector<bool> cycle);

  static EPSet naturals();
  static EPSet none();
  static EPSet finite(const std::vector<Index>& members);

  /// Builds the set whose membership is `member(n)`, given that membership is
  /// periodic with `period` from `start` on. Only 0..start+period-1 are
  /// queried.
  static EPSet from_predicate(Index start, Index period,
                              const std::function<bool(Index)>& member);

  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& cycle() const { return cycle_; }
  Index prefix_length() const { return prefix_.size(); }
  Index period() const { return cycle_.size(); }

  bool contains(Index n) const;
  bool contains(const Natural& n) const;
  bool infinite() const;
  bool empty() const;
  bool cofinite() const;

  std::optional<Index> next_at_or_after(Index a) const;
  std::optional<Index> next_absent_at_or_after(Index a) const;
  // Largest element not in the set; nullopt when the set is ℕ. Only
  // meaningful for cofinite sets.
  std::optional<Index> last_absent() const;
  std::optional<Index> last_member() const;  // finite sets only

  std::vector<Index> members_below(Index bound) const;
  // First `count` members in increasing order (fewer when the set is finite).
  std::vector<Index> first_members(Index count) const;

  EPSet operator|(const EPSet& other) const;
  EPSet operator&(const EPSet& other) const;
  EPSet operator-(const EPSet& other) const;
  EPSet complement() const;
  // {n + by : n in this}.
  EPSet shifted(Index by) const;

  friend bool operator==(const EPSet&, const EPSet&) = default;

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> cycle_;
};

}  // namespace selprin
