#pragma once

#include <cstdint>
#include <random>

#include "selprin/covers.hpp"
#include "selprin/epseq.hpp"
#include "selprin/rothberger.hpp"

namespace selprin {

struct GenBounds {
  Index max_prefix = 6;
  Index max_cycle = 4;
  Index max_value = 50;
  Index max_step = 12;  // increments of increasing sequences
};

struct PeriodicShape {
  std::vector<Block> prefix;
  std::vector<Block> cycle;
  Index shift = 1;

  BlockPartition build() const;
};

/// Reproducible random instances. Draws use plain modular reduction of a
/// 64-bit Mersenne Twister, so a seed gives the same instance on every
/// platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, GenBounds bounds = {});

  Index uniform(Index lo, Index hi);
  bool coin();

  EPSeq bounded_seq();
  EPSeq increasing_seq();
  EPSeq any_seq();
  EPSet infinite_set();
  EPSet any_set();

  EPCover cover(Index max_points);
  EPCover large_cover(Index max_points);
  FunFamily family(Index max_members);
  PeriodicShape periodic_partition(Index max_prefix_elems = 12,
                                   Index max_shift = 12);
  // A map from `domain_size` fresh points onto the given space.
  std::pair<PointSpace, PointMap> surjection_onto(const PointSpace& target,
                                                  Index extra_points);

  const GenBounds& bounds() const { return bounds_; }

 private:
  std::vector<Block> random_blocks(Index lo, Index hi);

  std::mt19937_64 rng_;
  GenBounds bounds_;
};

}  // namespace selprin
