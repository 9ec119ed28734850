#include "selprin/epseq.hpp"

#include <algorithm>
#include <sstream>

#include "selprin/errors.hpp"

namespace selprin {

namespace {

Natural sum(const std::vector<Natural>& xs) {
  Natural s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

template <typename T>
void shrink_to_minimal_period(std::vector<T>& cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < len && periodic; ++i)
      periodic = cycle[i] == cycle[i + p];
    if (periodic) {
      cycle.resize(p);
      return;
    }
  }
}

template <typename T>
void rotate_right(std::vector<T>& v) {
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

void require_increasing(const EPSeq& s, const char* what) {
  if (!s.strictly_increasing())
    throw NotIncreasingError(std::string(what) +
                             " requires a strictly increasing sequence");
}

}  // namespace

EPSeq::EPSeq(std::vector<Natural> prefix, TailKind kind,
             std::vector<Natural> cycle)
    : prefix_(std::move(prefix)), kind_(kind), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("EPSeq cycle must be nonempty");
  for (const auto& v : prefix_)
    if (v < 0) throw std::invalid_argument("EPSeq values must be naturals");
  for (const auto& v : cycle_)
    if (v < 0) throw std::invalid_argument("EPSeq values must be naturals");
  if (prefix_.empty()) {
    prefix_.push_back(cycle_.front());
    std::rotate(cycle_.begin(), cycle_.begin() + 1, cycle_.end());
  }
}

EPSeq EPSeq::values(std::vector<Natural> prefix, std::vector<Natural> cycle) {
  return EPSeq(std::move(prefix), TailKind::Values, std::move(cycle));
}

EPSeq EPSeq::increments(std::vector<Natural> prefix,
                        std::vector<Natural> cycle) {
  return EPSeq(std::move(prefix), TailKind::Increments, std::move(cycle));
}

EPSeq EPSeq::constant(const Natural& c) { return values({c}, {c}); }

EPSeq EPSeq::linear(const Natural& a, const Natural& b) {
  return increments({b}, {a});
}

Natural EPSeq::operator()(Index n) const {
  const Index k = prefix_.size();
  if (n < k) return prefix_[n];
  const Index p = cycle_.size();
  if (kind_ == TailKind::Values) return cycle_[(n - k) % p];
  const Index steps = n - k + 1;
  Natural v = prefix_.back() + Natural(steps / p) * growth();
  for (Index i = 0; i < steps % p; ++i) v += cycle_[i];
  return v;
}

Natural EPSeq::at(const Natural& n) const {
  const Index k = prefix_.size();
  if (n < k) return prefix_[n.convert_to<Index>()];
  const Natural p = cycle_.size();
  if (kind_ == TailKind::Values) return cycle_[Natural((n - k) % p).convert_to<Index>()];
  const Natural steps = n - k + 1;
  Natural v = prefix_.back() + (steps / p) * growth();
  const Index rest = Natural(steps % p).convert_to<Index>();
  for (Index i = 0; i < rest; ++i) v += cycle_[i];
  return v;
}

Natural EPSeq::growth() const {
  return kind_ == TailKind::Increments ? sum(cycle_) : Natural(0);
}

bool EPSeq::strictly_increasing() const {
  if (kind_ != TailKind::Increments) return false;
  for (std::size_t i = 1; i < prefix_.size(); ++i)
    if (prefix_[i] <= prefix_[i - 1]) return false;
  return std::all_of(cycle_.begin(), cycle_.end(),
                     [](const Natural& c) { return c >= 1; });
}

Index EPSeq::first_index_at_least(const Natural& v) const {
  require_increasing(*this, "first_index_at_least");
  for (Index i = 0; i < prefix_.size(); ++i)
    if (prefix_[i] >= v) return i;
  // Past the prefix: skip whole cycles, then walk at most one cycle.
  const Natural need = v - prefix_.back();
  const Index whole = to_index((need - 1) / growth());
  Index n = prefix_.size() - 1 + whole * cycle_.size();
  Natural value = prefix_.back() + Natural(whole) * growth();
  for (Index i = 0; value < v; ++i) {
    value += cycle_[i % cycle_.size()];
    ++n;
  }
  return n;
}

std::vector<Natural> EPSeq::take(Index count) const {
  std::vector<Natural> out;
  out.reserve(count);
  for (Index n = 0; n < count; ++n) out.push_back((*this)(n));
  return out;
}

std::vector<Natural> EPSeq::take_through(const Natural& bound) const {
  require_increasing(*this, "take_through");
  std::vector<Natural> out;
  for (Index n = 0;; ++n) {
    out.push_back((*this)(n));
    if (out.back() >= bound) return out;
  }
}

Natural eval(const EPSeq& s, Index n) { return s(n); }

EPSeq normalize(const EPSeq& s) {
  std::vector<Natural> prefix = s.prefix();
  std::vector<Natural> cycle = s.cycle();
  if (s.bounded()) {
    if (s.kind() == TailKind::Increments) cycle = {prefix.back()};
    shrink_to_minimal_period(cycle);
    while (prefix.size() > 1 && prefix.back() == cycle.back()) {
      prefix.pop_back();
      rotate_right(cycle);
    }
    return EPSeq::values(std::move(prefix), std::move(cycle));
  }
  shrink_to_minimal_period(cycle);
  while (prefix.size() > 1 &&
         prefix[prefix.size() - 1] - prefix[prefix.size() - 2] ==
             cycle.back()) {
    prefix.pop_back();
    rotate_right(cycle);
  }
  return EPSeq::increments(std::move(prefix), std::move(cycle));
}

bool same_stream(const EPSeq& a, const EPSeq& b) {
  return normalize(a) == normalize(b);
}

DominanceVerdict le_star(const EPSeq& f, const EPSeq& g) {
  const Index start = std::max(f.prefix().size(), g.prefix().size());
  const Index period = lcm_index(f.cycle().size(), g.cycle().size());
  const Natural grow_f = f.growth() * (period / f.cycle().size());
  const Natural grow_g = g.growth() * (period / g.cycle().size());
  // g(n+period) - f(n+period) = g(n) - f(n) + drift for n ≥ start.
  const Natural drift = grow_g - grow_f;

  DominanceVerdict verdict;
  std::optional<Natural> last_violation;
  auto note = [&](const Natural& n) {
    if (!last_violation || n > *last_violation) last_violation = n;
  };
  for (Index n = 0; n < start; ++n)
    if (f(n) > g(n)) note(Natural(n));

  std::vector<Index> recurring;
  for (Index r = 0; r < period; ++r) {
    const Natural d = g(start + r) - f(start + r);
    if (drift > 0) {
      if (d < 0) {
        const Natural count = (-d + drift - 1) / drift;
        note(Natural(start + r) + (count - 1) * period);
      }
    } else if (drift == 0) {
      if (d < 0) recurring.push_back(r);
    }
  }

  if (drift < 0) {
    std::ostringstream os;
    os << "f outgrows g by " << -drift << " every " << period
       << " indices; f(n) > g(n) for all large n";
    verdict.witness_note = os.str();
    return verdict;
  }
  if (!recurring.empty()) {
    std::ostringstream os;
    os << "f(n) > g(n) recurs for n = " << start << " + r (mod " << period
       << "), r in {";
    for (std::size_t i = 0; i < recurring.size(); ++i)
      os << (i ? " " : "") << recurring[i];
    os << "}";
    verdict.witness_note = os.str();
    return verdict;
  }
  verdict.holds = true;
  verdict.threshold = last_violation ? *last_violation + 1 : Natural(0);
  return verdict;
}

EPSeq diag_to_increasing(const EPSeq& f) {
  const EPSeq nf = normalize(f);
  if (nf.kind() != TailKind::Values)
    throw NotRepresentableError(
        "diagonal map of an unbounded sequence is not eventually periodic");
  std::vector<Natural> prefix;
  Natural running = 0;
  for (std::size_t i = 0; i < nf.prefix().size(); ++i) {
    running += nf.prefix()[i];
    prefix.push_back(running + i);
  }
  std::vector<Natural> steps;
  for (const auto& c : nf.cycle()) steps.push_back(c + 1);
  return normalize(EPSeq::increments(std::move(prefix), std::move(steps)));
}

EPSeq undiag(const EPSeq& g) {
  require_increasing(g, "undiag");
  const EPSeq ng = normalize(g);
  std::vector<Natural> prefix{ng.prefix().front()};
  for (std::size_t i = 1; i < ng.prefix().size(); ++i)
    prefix.push_back(ng.prefix()[i] - ng.prefix()[i - 1] - 1);
  std::vector<Natural> cycle;
  for (const auto& c : ng.cycle()) cycle.push_back(c - 1);
  return normalize(EPSeq::values(std::move(prefix), std::move(cycle)));
}

EPSet range_encode(const EPSeq& g) {
  require_increasing(g, "range_encode");
  const EPSeq ng = normalize(g);
  const Index anchor = to_index(ng.prefix().back());
  std::vector<bool> prefix(anchor, false);
  for (std::size_t i = 0; i + 1 < ng.prefix().size(); ++i)
    prefix[to_index(ng.prefix()[i])] = true;
  std::vector<bool> cycle(to_index(ng.growth()), false);
  Index offset = 0;
  for (const auto& c : ng.cycle()) {
    cycle[offset] = true;
    offset += to_index(c);
  }
  return EPSet(std::move(prefix), std::move(cycle));
}

EPSeq increasing_enum(const EPSet& a) {
  if (!a.infinite()) throw FiniteSetError("set has no infinite tail");
  std::vector<Natural> prefix;
  for (Index n = 0; n < a.prefix_length(); ++n)
    if (a.prefix()[n]) prefix.emplace_back(n);
  std::vector<Index> offsets;
  for (Index i = 0; i < a.period(); ++i)
    if (a.cycle()[i]) offsets.push_back(i);
  prefix.emplace_back(a.prefix_length() + offsets.front());
  std::vector<Natural> steps;
  for (std::size_t i = 1; i < offsets.size(); ++i)
    steps.emplace_back(offsets[i] - offsets[i - 1]);
  steps.emplace_back(a.period() + offsets.front() - offsets.back());
  return normalize(EPSeq::increments(std::move(prefix), std::move(steps)));
}

EPSet membership_pattern(const EPSeq& e, const EPSet& target) {
  require_increasing(e, "membership_pattern");
  const EPSeq ne = normalize(e);
  const Index start = std::max<Index>(ne.prefix().size() - 1,
                                      ne.first_index_at_least(target.prefix_length()));
  const Index step_mod = to_index(ne.growth() % target.period());
  const Index laps = target.period() / std::gcd(target.period(), step_mod);
  return EPSet::from_predicate(start, ne.cycle().size() * laps, [&](Index j) {
    return target.contains(ne(j));
  });
}

}  // namespace selprin
