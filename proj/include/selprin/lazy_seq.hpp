#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "selprin/epseq.hpp"

namespace selprin {

/// An on-demand sequence of naturals. Term n is produced by `rule(n, earlier)`
/// where `earlier` holds terms 0..n-1. Terms are memoized; copies share the
/// memo, so a LazySeq must be read by one consumer at a time.
class LazySeq {
 public:
  using Rule = std::function<Natural(Index n, std::span<const Natural> earlier)>;

  explicit LazySeq(Rule rule);
  static LazySeq of(const EPSeq& s);

  const Natural& operator[](Index n) const;

  std::vector<Natural> take(Index count) const;
  // Every term < bound, followed by the first term ≥ bound. Requires the
  // sequence to be unbounded.
  std::vector<Natural> take_through(const Natural& bound) const;

 private:
  struct State {
    Rule rule;
    std::vector<Natural> memo;
  };
  std::shared_ptr<State> state_;
};

}  // namespace selprin
