#pragma once

#include <string>
#include <vector>

#include "selprin/epset.hpp"
#include "selprin/natural.hpp"

namespace selprin {

enum class TailKind { Values, Increments };

/// A finitely described infinite sequence of naturals.
///
/// The first `prefix().size()` terms are listed explicitly. After that the
/// tail either repeats `cycle()` as values (`TailKind::Values`) or keeps
/// adding the entries of `cycle()`, in rotation, to the last listed value
/// (`TailKind::Increments`). An empty prefix is accepted on construction and
/// replaced by the first cycle term, which leaves the value stream unchanged.
class EPSeq {
 public:
  EPSeq(std::vector<Natural> prefix, TailKind kind, std::vector<Natural> cycle);

  static EPSeq values(std::vector<Natural> prefix, std::vector<Natural> cycle);
  static EPSeq increments(std::vector<Natural> prefix,
                          std::vector<Natural> cycle);
  static EPSeq constant(const Natural& c);
  // a·n + b
  static EPSeq linear(const Natural& a, const Natural& b);

  const std::vector<Natural>& prefix() const { return prefix_; }
  TailKind kind() const { return kind_; }
  const std::vector<Natural>& cycle() const { return cycle_; }

  Natural operator()(Index n) const;
  // Same as operator() for indices past the Index range.
  Natural at(const Natural& n) const;

  // Increase over one pass through the cycle; zero for value tails.
  Natural growth() const;
  bool bounded() const { return growth() == 0; }
  bool strictly_increasing() const;

  // Least n with value ≥ v. Requires a strictly increasing sequence.
  Index first_index_at_least(const Natural& v) const;

  std::vector<Natural> take(Index count) const;
  // Every term < bound, followed by the first term ≥ bound.
  std::vector<Natural> take_through(const Natural& bound) const;

  friend bool operator==(const EPSeq&, const EPSeq&) = default;

 private:
  std::vector<Natural> prefix_;
  TailKind kind_;
  std::vector<Natural> cycle_;
};

Natural eval(const EPSeq& s, Index n);

/// Canonical representative of the value stream: value tails for bounded
/// streams and increment tails otherwise, with minimal cycle and the shortest
/// nonempty prefix.
EPSeq normalize(const EPSeq& s);

bool same_stream(const EPSeq& a, const EPSeq& b);

struct DominanceVerdict {
  bool holds = false;
  Natural threshold = 0;  // minimal, meaningful when holds
  std::string witness_note;
};

/// Exact decision of f ≤* g. When it holds the reported threshold is the
/// least t with f(n) ≤ g(n) for every n ≥ t.
DominanceVerdict le_star(const EPSeq& f, const EPSeq& g);

/// n ↦ f(0)+…+f(n)+n. Defined for bounded f; an unbounded f would give a
/// sequence outside the eventually periodic class.
EPSeq diag_to_increasing(const EPSeq& f);

/// Inverse of diag_to_increasing on strictly increasing sequences.
EPSeq undiag(const EPSeq& g);

/// The set {g(n) : n ∈ ℕ} of a strictly increasing g.
EPSet range_encode(const EPSeq& g);

/// Increasing enumeration of an infinite set.
EPSeq increasing_enum(const EPSet& a);

/// {j : e(j) ∈ target} for a strictly increasing e. Eventually periodic since
/// e(j) mod period(target) cycles once e is past the target's prefix.
EPSet membership_pattern(const EPSeq& e, const EPSet& target);

}  // namespace selprin
