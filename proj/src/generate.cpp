#include "selprin/generate.hpp"

#include <algorithm>

namespace selprin {

BlockPartition PeriodicShape::build() const {
  return BlockPartition::periodic(prefix, cycle, shift);
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GenBounds bounds)
    : rng_(seed), bounds_(bounds) {}

Index InstanceGenerator::uniform(Index lo, Index hi) {
  return lo + rng_() % (hi - lo + 1);
}

bool InstanceGenerator::coin() { return rng_() & 1; }

EPSeq InstanceGenerator::bounded_seq() {
  std::vector<Natural> prefix(uniform(1, bounds_.max_prefix));
  std::vector<Natural> cycle(uniform(1, bounds_.max_cycle));
  for (auto& v : prefix) v = uniform(0, bounds_.max_value);
  for (auto& v : cycle) v = uniform(0, bounds_.max_value);
  return EPSeq::values(std::move(prefix), std::move(cycle));
}

EPSeq InstanceGenerator::increasing_seq() {
  const Index len = uniform(1, bounds_.max_prefix);
  std::vector<Index> picks;
  while (picks.size() < len) {
    const Index v = uniform(0, bounds_.max_value);
    if (std::find(picks.begin(), picks.end(), v) == picks.end()) picks.push_back(v);
  }
  std::sort(picks.begin(), picks.end());
  std::vector<Natural> prefix(picks.begin(), picks.end());
  std::vector<Natural> cycle(uniform(1, bounds_.max_cycle));
  for (auto& v : cycle) v = uniform(1, bounds_.max_step);
  return EPSeq::increments(std::move(prefix), std::move(cycle));
}

EPSeq InstanceGenerator::any_seq() {
  return coin() ? bounded_seq() : increasing_seq();
}

EPSet InstanceGenerator::any_set() {
  std::vector<bool> prefix(uniform(0, bounds_.max_prefix));
  std::vector<bool> cycle(uniform(1, bounds_.max_cycle));
  for (Index i = 0; i < prefix.size(); ++i) prefix[i] = coin();
  for (Index i = 0; i < cycle.size(); ++i) cycle[i] = coin();
  return EPSet(std::move(prefix), std::move(cycle));
}

EPSet InstanceGenerator::infinite_set() {
  std::vector<bool> prefix(uniform(0, bounds_.max_prefix));
  std::vector<bool> cycle(uniform(1, bounds_.max_cycle));
  for (Index i = 0; i < prefix.size(); ++i) prefix[i] = coin();
  for (Index i = 0; i < cycle.size(); ++i) cycle[i] = coin();
  cycle[uniform(0, cycle.size() - 1)] = true;
  return EPSet(std::move(prefix), std::move(cycle));
}

EPCover InstanceGenerator::cover(Index max_points) {
  std::vector<std::string> ids;
  const Index n = uniform(1, max_points);
  for (Index i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  PointSpace space(std::move(ids));
  auto random_trace = [&] {
    PointSet t = space.none();
    for (Index i = 0; i < space.size(); ++i)
      if (coin()) t.set(i);
    return t;
  };
  std::vector<PointSet> prefix(uniform(0, bounds_.max_prefix));
  std::vector<PointSet> cycle(uniform(1, bounds_.max_cycle));
  for (auto& t : prefix) t = random_trace();
  for (auto& t : cycle) t = random_trace();
  return EPCover(std::move(space), std::move(prefix), std::move(cycle));
}

EPCover InstanceGenerator::large_cover(Index max_points) {
  for (;;) {
    EPCover c = cover(max_points);
    if (is_large(c).large) return c;
  }
}

FunFamily InstanceGenerator::family(Index max_members) {
  const Index n = uniform(1, max_members);
  std::vector<EPSet> members;
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    members.push_back(infinite_set());
    labels.push_back("a" + std::to_string(i));
  }
  return FunFamily(std::move(members), std::move(labels));
}

std::vector<Block> InstanceGenerator::random_blocks(Index lo, Index hi) {
  std::vector<Index> elems;
  for (Index x = lo; x < hi; ++x) elems.push_back(x);
  // Fisher-Yates with the same modular draw as everything else.
  for (Index i = elems.size(); i > 1; --i) std::swap(elems[i - 1], elems[uniform(0, i - 1)]);
  std::vector<Block> blocks;
  for (Index x : elems) {
    if (blocks.empty() || uniform(0, 2) == 0)
      blocks.push_back({x});
    else
      blocks[uniform(0, blocks.size() - 1)].push_back(x);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return blocks;
}

PeriodicShape InstanceGenerator::periodic_partition(Index max_prefix_elems,
                                                    Index max_shift) {
  PeriodicShape shape;
  const Index head = uniform(0, max_prefix_elems);
  shape.shift = uniform(1, max_shift);
  shape.prefix = random_blocks(0, head);
  shape.cycle = random_blocks(head, head + shape.shift);
  return shape;
}

std::pair<PointSpace, PointMap> InstanceGenerator::surjection_onto(
    const PointSpace& target, Index extra_points) {
  std::vector<std::string> ids;
  PointMap f;
  for (Index i = 0; i < target.size() + extra_points; ++i) {
    ids.push_back("q" + std::to_string(i));
    f[ids.back()] = i < target.size() ? target.points[i]
                                      : target.points[uniform(0, target.size() - 1)];
  }
  // Shuffle which domain point hits which target point.
  std::vector<std::string> images;
  for (const auto& id : ids) images.push_back(f[id]);
  for (Index i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[uniform(0, i - 1)]);
  for (Index i = 0; i < ids.size(); ++i) f[ids[i]] = images[i];
  return {PointSpace(std::move(ids)), std::move(f)};
}

}  // namespace selprin
