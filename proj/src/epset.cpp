#include "selprin/epset.hpp"

#include <algorithm>

#include "selprin/errors.hpp"

namespace selprin {

EPSet::EPSet(std::vector<bool> prefix, std::vector<bool> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("EPSet cycle must be nonempty");
  canonicalize();
}

EPSet EPSet::naturals() { return EPSet({}, {true}); }

EPSet EPSet::none() { return EPSet({}, {false}); }

EPSet EPSet::finite(const std::vector<Index>& members) {
  Index top = 0;
  for (Index m : members) top = std::max(top, m + 1);
  std::vector<bool> bits(top, false);
  for (Index m : members) bits[m] = true;
  return EPSet(std::move(bits), {false});
}

EPSet EPSet::from_predicate(Index start, Index period,
                            const std::function<bool(Index)>& member) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  std::vector<bool> prefix(start);
  for (Index n = 0; n < start; ++n) prefix[n] = member(n);
  std::vector<bool> cycle(period);
  for (Index i = 0; i < period; ++i) cycle[i] = member(start + i);
  return EPSet(std::move(prefix), std::move(cycle));
}

void EPSet::canonicalize() {
  const Index len = cycle_.size();
  for (Index p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (Index i = 0; i + p < len && periodic; ++i)
      periodic = cycle_[i] == cycle_[i + p];
    if (periodic) {
      cycle_.resize(p);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

bool EPSet::contains(Index n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

bool EPSet::contains(const Natural& n) const {
  if (n < 0) return false;
  if (n < prefix_.size()) return prefix_[n.convert_to<Index>()];
  Natural offset = (n - prefix_.size()) % cycle_.size();
  return cycle_[offset.convert_to<Index>()];
}

bool EPSet::infinite() const {
  return std::find(cycle_.begin(), cycle_.end(), true) != cycle_.end();
}

bool EPSet::empty() const {
  return !infinite() &&
         std::find(prefix_.begin(), prefix_.end(), true) == prefix_.end();
}

bool EPSet::cofinite() const {
  return std::find(cycle_.begin(), cycle_.end(), false) == cycle_.end();
}

std::optional<Index> EPSet::next_at_or_after(Index a) const {
  for (Index n = a; n < prefix_.size(); ++n)
    if (prefix_[n]) return n;
  if (!infinite()) return std::nullopt;
  Index n = std::max<Index>(a, prefix_.size());
  for (;; ++n)
    if (cycle_[(n - prefix_.size()) % cycle_.size()]) return n;
}

std::optional<Index> EPSet::next_absent_at_or_after(Index a) const {
  for (Index n = a; n < prefix_.size(); ++n)
    if (!prefix_[n]) return n;
  if (cofinite()) return std::nullopt;
  Index n = std::max<Index>(a, prefix_.size());
  for (;; ++n)
    if (!cycle_[(n - prefix_.size()) % cycle_.size()]) return n;
}

std::optional<Index> EPSet::last_absent() const {
  for (Index n = prefix_.size(); n-- > 0;)
    if (!prefix_[n]) return n;
  return std::nullopt;
}

std::optional<Index> EPSet::last_member() const {
  for (Index n = prefix_.size(); n-- > 0;)
    if (prefix_[n]) return n;
  return std::nullopt;
}

std::vector<Index> EPSet::members_below(Index bound) const {
  std::vector<Index> out;
  for (Index n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::vector<Index> EPSet::first_members(Index count) const {
  std::vector<Index> out;
  Index n = 0;
  while (out.size() < count) {
    auto next = next_at_or_after(n);
    if (!next) break;
    out.push_back(*next);
    n = *next + 1;
  }
  return out;
}

namespace {

template <typename Op>
EPSet combine(const EPSet& a, const EPSet& b, Op op) {
  const Index start = std::max(a.prefix_length(), b.prefix_length());
  const Index period = lcm_index(a.period(), b.period());
  return EPSet::from_predicate(start, period, [&](Index n) {
    return op(a.contains(n), b.contains(n));
  });
}

}  // namespace

EPSet EPSet::operator|(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

EPSet EPSet::operator&(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

EPSet EPSet::operator-(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && !y; });
}

EPSet EPSet::complement() const {
  std::vector<bool> p(prefix_.size()), c(cycle_.size());
  for (Index i = 0; i < p.size(); ++i) p[i] = !prefix_[i];
  for (Index i = 0; i < c.size(); ++i) c[i] = !cycle_[i];
  return EPSet(std::move(p), std::move(c));
}

EPSet EPSet::shifted(Index by) const {
  std::vector<bool> p(by, false);
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  return EPSet(std::move(p), cycle_);
}

}  // namespace selprin
