#include "selprin/lazy_seq.hpp"

namespace selprin {

LazySeq::LazySeq(Rule rule) : state_(std::make_shared<State>()) {
  state_->rule = std::move(rule);
}

LazySeq LazySeq::of(const EPSeq& s) {
  return LazySeq([s](Index n, std::span<const Natural>) { return s(n); });
}

const Natural& LazySeq::operator[](Index n) const {
  auto& memo = state_->memo;
  while (memo.size() <= n) {
    Natural next = state_->rule(memo.size(), std::span<const Natural>(memo));
    memo.push_back(std::move(next));
  }
  return memo[n];
}

std::vector<Natural> LazySeq::take(Index count) const {
  if (count > 0) (*this)[count - 1];
  return {state_->memo.begin(), state_->memo.begin() + count};
}

std::vector<Natural> LazySeq::take_through(const Natural& bound) const {
  std::vector<Natural> out;
  for (Index n = 0;; ++n) {
    out.push_back((*this)[n]);
    if (out.back() >= bound) return out;
  }
}

}  // namespace selprin
