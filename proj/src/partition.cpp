#include "selprin/partition.hpp"

#include <algorithm>
#include <unordered_map>
#include <variant>

#include "selprin/errors.hpp"

namespace selprin {

namespace {

struct Diagonal {
  std::vector<EPSet> classes;
  std::vector<EPSeq> enums;
};

struct Intervals {
  EPSeq boundary;
};

struct Periodic {
  std::vector<Block> prefix;
  std::vector<Block> cycle;
  Index shift;
};

struct Merged {
  std::vector<BlockPartition> parts;
};

struct Absorbed {
  BlockPartition base;
  EPSet leftover;
  std::optional<EPSeq> enumeration;  // when leftover is infinite
  std::vector<Index> finite_members;
};

struct Generated {
  std::function<Block(Index)> block;
  std::function<Index(Index)> bound;
};

Index ceil_div(Index a, Index b) { return (a + b - 1) / b; }

bool meets(const Block& b, const EPSet& target) {
  return std::any_of(b.begin(), b.end(),
                     [&](Index x) { return target.contains(x); });
}

}  // namespace

struct BlockPartition::Node {
  EPSet domain;
  std::variant<Diagonal, Intervals, Periodic, Merged, Absorbed, Generated> shape;
};

BlockPartition::BlockPartition(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

BlockPartition BlockPartition::empty() { return merged({}); }

BlockPartition BlockPartition::diagonal(std::vector<EPSet> classes) {
  EPSet domain = EPSet::none();
  Diagonal d;
  for (auto& c : classes) {
    if (!c.infinite()) throw FiniteSetError("diagonal grouping needs infinite classes");
    if (!(domain & c).empty())
      throw DomainOverlapError("diagonal classes must be disjoint");
    domain = domain | c;
    d.enums.push_back(increasing_enum(c));
  }
  d.classes = std::move(classes);
  return BlockPartition(
      std::make_shared<const Node>(Node{std::move(domain), std::move(d)}));
}

BlockPartition BlockPartition::intervals(const EPSeq& boundary) {
  if (!boundary.strictly_increasing())
    throw NotIncreasingError("interval boundary must be strictly increasing");
  return BlockPartition(std::make_shared<const Node>(
      Node{EPSet::naturals(), Intervals{normalize(boundary)}}));
}

BlockPartition BlockPartition::periodic(std::vector<Block> prefix,
                                        std::vector<Block> cycle, Index shift) {
  for (auto* list : {&prefix, &cycle})
    for (auto& b : *list) {
      std::sort(b.begin(), b.end());
      if (std::adjacent_find(b.begin(), b.end()) != b.end())
        throw NotAPartitionError("block lists an element twice");
    }
  std::vector<Index> cycle_elems;
  for (const auto& b : cycle) cycle_elems.insert(cycle_elems.end(), b.begin(), b.end());
  if (!cycle_elems.empty() && shift == 0)
    throw NotAPartitionError("repeating blocks need a positive shift");

  Index top = 0;
  std::unordered_map<Index, int> seen;
  for (const auto& b : prefix)
    for (Index x : b) {
      if (seen[x]++) throw NotAPartitionError("element " + std::to_string(x) + " appears twice");
      top = std::max(top, x + 1);
    }
  for (Index x : cycle_elems) top = std::max(top, x + 1);
  std::vector<int> residue_used(shift, 0);
  for (Index x : cycle_elems)
    if (residue_used[x % shift]++)
      throw NotAPartitionError("repeating blocks collide modulo the shift");
  for (const auto& [x, _] : seen)
    for (Index e : cycle_elems)
      if (x >= e && (x - e) % shift == 0)
        throw NotAPartitionError("element " + std::to_string(x) +
                                 " is hit by a repeating block");

  auto member = [&](Index n) {
    if (seen.count(n)) return true;
    return std::any_of(cycle_elems.begin(), cycle_elems.end(), [&](Index e) {
      return n >= e && (n - e) % shift == 0;
    });
  };
  EPSet domain = EPSet::from_predicate(top, cycle_elems.empty() ? 1 : shift, member);
  return BlockPartition(std::make_shared<const Node>(
      Node{std::move(domain), Periodic{std::move(prefix), std::move(cycle), shift}}));
}

BlockPartition BlockPartition::merged(std::vector<BlockPartition> parts) {
  EPSet domain = EPSet::none();
  for (const auto& p : parts) domain = domain | p.domain();
  return BlockPartition(std::make_shared<const Node>(
      Node{std::move(domain), Merged{std::move(parts)}}));
}

BlockPartition BlockPartition::absorbed(BlockPartition base, EPSet leftover) {
  if (!(base.domain() & leftover).empty())
    throw DomainOverlapError("leftover indices overlap the partition domain");
  Absorbed a{base, leftover, std::nullopt, {}};
  if (leftover.infinite())
    a.enumeration = increasing_enum(leftover);
  else
    a.finite_members = leftover.members_below(leftover.prefix_length());
  EPSet domain = base.domain() | leftover;
  return BlockPartition(
      std::make_shared<const Node>(Node{std::move(domain), std::move(a)}));
}

BlockPartition BlockPartition::generated(EPSet domain,
                                         std::function<Block(Index)> block,
                                         std::function<Index(Index)> block_bound) {
  return BlockPartition(std::make_shared<const Node>(
      Node{std::move(domain), Generated{std::move(block), std::move(block_bound)}}));
}

const EPSet& BlockPartition::domain() const { return node_->domain; }

Block BlockPartition::block(Index n) const {
  Block out = std::visit(
      [n](const auto& s) -> Block {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Diagonal>) {
          Block b;
          for (Index i = 0; i < s.enums.size() && i <= n; ++i)
            b.push_back(to_index(s.enums[i](n - i)));
          return b;
        } else if constexpr (std::is_same_v<S, Intervals>) {
          const Index lo = n == 0 ? 0 : to_index(s.boundary(n));
          const Index hi = to_index(s.boundary(n + 1));
          Block b;
          for (Index x = lo; x < hi; ++x) b.push_back(x);
          return b;
        } else if constexpr (std::is_same_v<S, Periodic>) {
          if (n < s.prefix.size()) return s.prefix[n];
          if (s.cycle.empty()) return {};
          const Index k = n - s.prefix.size();
          const Index lap = k / s.cycle.size();
          Block b = s.cycle[k % s.cycle.size()];
          for (auto& x : b) x += lap * s.shift;
          return b;
        } else if constexpr (std::is_same_v<S, Merged>) {
          const Index m = s.parts.size();
          Block b;
          auto add = [&](const Block& g) { b.insert(b.end(), g.begin(), g.end()); };
          for (Index i = 0; i < m && i < n; ++i) add(s.parts[i].block(n));
          if (n < m)
            for (Index j = 0; j <= n; ++j) add(s.parts[n].block(j));
          return b;
        } else if constexpr (std::is_same_v<S, Absorbed>) {
          Block b = s.base.block(n);
          if (s.enumeration)
            b.push_back(to_index((*s.enumeration)(n)));
          else if (n < s.finite_members.size())
            b.push_back(s.finite_members[n]);
          return b;
        } else {
          return s.block(n);
        }
      },
      node_->shape);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> BlockPartition::blocks(Index count) const {
  std::vector<Block> out;
  out.reserve(count);
  for (Index n = 0; n < count; ++n) out.push_back(block(n));
  return out;
}

Index BlockPartition::block_bound(Index element_bound) const {
  const Index e = element_bound;
  return std::visit(
      [e](const auto& s) -> Index {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Diagonal>) {
          return e + s.classes.size();
        } else if constexpr (std::is_same_v<S, Intervals>) {
          return e + 1;
        } else if constexpr (std::is_same_v<S, Periodic>) {
          if (s.cycle.empty()) return s.prefix.size();
          return s.prefix.size() + s.cycle.size() * (e / s.shift + 2);
        } else if constexpr (std::is_same_v<S, Merged>) {
          Index b = s.parts.size();
          for (const auto& p : s.parts) b = std::max(b, p.block_bound(e));
          return b;
        } else if constexpr (std::is_same_v<S, Absorbed>) {
          return std::max(s.base.block_bound(e), e + 1);
        } else {
          return s.bound(e);
        }
      },
      node_->shape);
}

bool BlockPartition::certified() const {
  return std::visit(
      [](const auto& s) -> bool {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Merged>) {
          return std::all_of(s.parts.begin(), s.parts.end(),
                             [](const auto& p) { return p.certified(); });
        } else if constexpr (std::is_same_v<S, Absorbed>) {
          return s.base.certified();
        } else {
          return !std::is_same_v<S, Generated>;
        }
      },
      node_->shape);
}

std::string BlockPartition::shape() const {
  static const char* names[] = {"diagonal", "intervals", "periodic",
                                "merged",   "absorbed",  "generated"};
  return names[node_->shape.index()];
}

EPSet interval_hits(const EPSeq& boundary, const EPSet& target) {
  if (!boundary.strictly_increasing())
    throw NotIncreasingError("slalom boundary must be strictly increasing");
  const EPSeq b = normalize(boundary);
  // Past `start`, whether interval n meets the target depends only on the
  // phase of n in the increment cycle and on b(n) mod period(target).
  const Index start = std::max<Index>(b.prefix().size() - 1,
                                      b.first_index_at_least(target.prefix_length()));
  const Index step_mod = to_index(b.growth() % target.period());
  const Index laps = target.period() / std::gcd(target.period(), step_mod);
  return EPSet::from_predicate(start, b.cycle().size() * laps, [&](Index n) {
    const Index lo = to_index(b(n));
    const auto next = target.next_at_or_after(lo);
    return next && Natural(*next) < b(n + 1);
  });
}

EPSet BlockPartition::hit_pattern(const EPSet& target) const {
  return std::visit(
      [&](const auto& s) -> EPSet {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Diagonal>) {
          EPSet hits = EPSet::none();
          for (Index i = 0; i < s.enums.size(); ++i)
            hits = hits | membership_pattern(s.enums[i], target).shifted(i);
          return hits;
        } else if constexpr (std::is_same_v<S, Intervals>) {
          const EPSet inner = interval_hits(s.boundary, target);
          const auto first = target.next_at_or_after(0);
          const bool head = first && Natural(*first) < s.boundary(1);
          return EPSet::from_predicate(
              std::max<Index>(inner.prefix_length(), 1), inner.period(),
              [&](Index n) { return n == 0 ? head : inner.contains(n); });
        } else if constexpr (std::is_same_v<S, Periodic>) {
          const Index q = s.prefix.size();
          if (s.cycle.empty())
            return EPSet::from_predicate(q, 1, [&](Index n) {
              return n < q && meets(s.prefix[n], target);
            });
          Index min_elem = std::numeric_limits<Index>::max();
          for (const auto& b : s.cycle)
            for (Index x : b) min_elem = std::min(min_elem, x);
          if (min_elem == std::numeric_limits<Index>::max()) min_elem = 0;
          const Index laps_before =
              target.prefix_length() > min_elem
                  ? ceil_div(target.prefix_length() - min_elem, s.shift)
                  : 0;
          const Index step_mod = s.shift % target.period();
          const Index laps = target.period() / std::gcd(target.period(), step_mod);
          return EPSet::from_predicate(q + laps_before * s.cycle.size(),
                                       laps * s.cycle.size(),
                                       [&](Index n) { return meets(block(n), target); });
        } else if constexpr (std::is_same_v<S, Merged>) {
          const Index m = s.parts.size();
          std::vector<EPSet> parts;
          Index start = m, period = 1;
          for (const auto& p : s.parts) {
            parts.push_back(p.hit_pattern(target));
            start = std::max(start, parts.back().prefix_length());
            period = lcm_index(period, parts.back().period());
          }
          return EPSet::from_predicate(start, period, [&](Index n) {
            if (n < m) return meets(block(n), target);
            return std::any_of(parts.begin(), parts.end(),
                               [n](const EPSet& h) { return h.contains(n); });
          });
        } else if constexpr (std::is_same_v<S, Absorbed>) {
          EPSet hits = s.base.hit_pattern(target);
          if (s.enumeration) return hits | membership_pattern(*s.enumeration, target);
          std::vector<Index> extra;
          for (Index n = 0; n < s.finite_members.size(); ++n)
            if (target.contains(s.finite_members[n])) extra.push_back(n);
          return hits | EPSet::finite(extra);
        } else {
          throw std::logic_error("hit_pattern needs a certified partition");
        }
      },
      node_->shape);
}

std::vector<bool> BlockPartition::hit_prefix(const EPSet& target, Index count) const {
  std::vector<bool> out(count);
  for (Index n = 0; n < count; ++n) out[n] = meets(block(n), target);
  return out;
}

void BlockPartition::check(Index horizon) const {
  const Index count = block_bound(horizon);
  std::unordered_map<Index, Index> owner;
  for (Index n = 0; n < count; ++n) {
    for (Index x : block(n)) {
      if (!domain().contains(x))
        throw NotAPartitionError("block " + std::to_string(n) + " holds " +
                                 std::to_string(x) + " outside the domain");
      auto [it, fresh] = owner.emplace(x, n);
      if (!fresh)
        throw NotAPartitionError("element " + std::to_string(x) +
                                 " lies in blocks " + std::to_string(it->second) +
                                 " and " + std::to_string(n));
    }
  }
  for (Index x : domain().members_below(horizon))
    if (!owner.count(x))
      throw NotAPartitionError("element " + std::to_string(x) +
                               " is in no block among the first " +
                               std::to_string(count));
}

bool same_blocks(const BlockPartition& a, const BlockPartition& b, Index count) {
  return a.domain() == b.domain() && a.blocks(count) == b.blocks(count);
}

}  // namespace selprin
