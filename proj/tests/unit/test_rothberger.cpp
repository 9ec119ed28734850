#include "selprin/errors.hpp"
#include "selprin/generate.hpp"
#include "selprin/oracle.hpp"
#include "selprin/rothberger.hpp"
#include "support.hpp"

using namespace selprin;
using namespace support;

namespace {

const EPSet kEvens = bits({}, {1, 0});
const EPSet kOdds = bits({}, {0, 1});

// Largest index n < count with a ∩ F_n = ∅, by direct scan.
std::optional<Index> last_disjoint_block(const EPSet& a, const BlockPartition& p,
                                         Index count) {
  std::optional<Index> last;
  for (Index n = 0; n < count; ++n) {
    bool meets = false;
    for (Index m : p.block(n)) meets = meets || naive_member(a, m);
    if (!meets) last = n;
  }
  return last;
}

}  // namespace

TEST_CASE("families are validated") {
  CHECK_THROWS_AS(FunFamily({}, {}), EmptyFamily);
  CHECK_THROWS_AS(FunFamily({kEvens, EPSet::finite({1})}, {"a", "b"}), FiniteSetError);
  CHECK_THROWS_AS(FunFamily({kEvens, kOdds}, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("cover of a family") {
  const EPCover c = build_rothberger_cover(FunFamily({kEvens, kOdds}, {"e", "o"}));
  REQUIRE(c.period() == 2);
  CHECK(c.space().names(c.trace(0)) == std::vector<std::string>{"e"});
  CHECK(c.space().names(c.trace(1)) == std::vector<std::string>{"o"});

  const EPCover all = build_rothberger_cover(FunFamily({EPSet::naturals()}, {"n"}));
  CHECK(all.space().names(all.trace(7)) == std::vector<std::string>{"n"});

  const EPCover half = build_rothberger_cover(FunFamily({kEvens}, {"e"}));
  CHECK(half.space().names(half.trace(4)) == std::vector<std::string>{"e"});
  CHECK(half.trace(5).none());
  CHECK(half.space().realization.at("e") == kEvens);
}

TEST_CASE("random family covers are large and faithful") {
  InstanceGenerator gen(51);
  for (int i = 0; i < 200; ++i) {
    const FunFamily y = gen.family(10);
    const EPCover c = build_rothberger_cover(y);
    REQUIRE(is_large(c).large);
    for (Index n = 0; n < 100; ++n)
      for (Index k = 0; k < y.members.size(); ++k)
        REQUIRE(c.trace(n)[c.space().index_of(y.labels[k])] == naive_member(y.members[k], n));
  }
}

TEST_CASE("witness to partition") {
  const FunFamily y({kEvens, kOdds}, {"e", "o"});
  const auto r = group_cover(build_rothberger_cover(y));
  const MemberPartition p = witness_to_partition(y, r.witness);
  CHECK(p.partition.blocks(3) == std::vector<Block>{{0}, {1, 2}, {3, 4}});
  CHECK(p.thresholds == std::vector<Index>{0, 1});

  const FunFamily nat({EPSet::naturals()}, {"n"});
  const auto singles = GroupabilityWitness{BlockPartition::periodic({}, {{0}}, 1), {{"n", 0}}};
  const MemberPartition q = witness_to_partition(nat, singles);
  CHECK(q.thresholds == std::vector<Index>{0});

  auto broken = r.witness;
  broken.thresholds["o"] = 0;
  CHECK_THROWS_AS(witness_to_partition(y, broken), InvalidWitnessError);
  const auto gappy = GroupabilityWitness{BlockPartition::periodic({}, {{0}}, 2), {{"e", 0}, {"o", 0}}};
  CHECK_THROWS_AS(witness_to_partition(y, gappy), InvalidWitnessError);
}

TEST_CASE("partition to slalom") {
  const FunFamily y({kEvens, kOdds}, {"e", "o"});
  const auto r = group_cover(build_rothberger_cover(y));
  const auto check = partition_to_slalom_check(y, witness_to_partition(y, r.witness).partition);
  for (const auto& v : check.verdicts) CHECK(v.holds);

  const FunFamily nat({EPSet::naturals()}, {"n"});
  const auto singles = partition_to_slalom_check(nat, BlockPartition::periodic({}, {{0}}, 1));
  CHECK(singles.slalom.boundary.take(5) == nats({0, 1, 2, 3, 4}));
  CHECK(singles.verdicts[0].holds);

  const FunFamily evens({kEvens}, {"e"});
  const auto pairs = partition_to_slalom_check(evens, BlockPartition::periodic({}, {{0, 1}}, 2));
  CHECK(pairs.slalom.boundary.take(4) == nats({0, 2, 4, 6}));
  CHECK(pairs.verdicts[0].holds);
  CHECK(pairs.verdicts[0].threshold == 0);
}

TEST_CASE("pipeline examples") {
  const FunFamily y({kEvens, kOdds}, {"e", "o"});
  const PipelineReport r = b_pipeline(y);
  CHECK(r.ok);
  REQUIRE(r.dominance.size() == 2);
  for (const auto& d : r.dominance) CHECK(d.holds);
  for (Index n = 2; n < 200; ++n) {
    CHECK(r.bound[n] >= 2 * n + 1);
  }

  const PipelineReport nat = b_pipeline(FunFamily({EPSet::naturals()}, {"n"}));
  CHECK(nat.ok);
  CHECK(nat.slalom.boundary.take(5) == nats({0, 1, 2, 3, 4}));
  CHECK(nat.bound.take(4) == nats({0, 2, 4, 6}));
}

TEST_CASE("random pipelines hold up against the greedy oracle") {
  InstanceGenerator gen(52);
  for (int i = 0; i < 40; ++i) {
    const FunFamily y = gen.family(10);
    const PipelineReport r = b_pipeline(y);
    REQUIRE(r.ok);
    const auto boundary = r.slalom.boundary.take_through(Natural(3000));
    std::vector<oracle::FinSeq> ys;
    for (const auto& m : y.members) {
      oracle::FinSeq s;
      for (Index k : m.members_below(6000)) s.push_back(k);
      ys.push_back(s);
    }
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const auto seen = oracle::check_through_h(ys[k], boundary);
      REQUIRE(seen.holds());
      REQUIRE(seen.threshold == r.through[k].threshold);
    }
    const auto greedy = oracle::greedy_slalom_h(ys, Natural(0));
    REQUIRE(greedy.has_value());
    for (const auto& s : ys) REQUIRE(oracle::check_through_h(s, *greedy).holds());

    const auto& mp = r.partition;
    for (std::size_t k = 0; k < y.members.size(); ++k) {
      const auto last = last_disjoint_block(y.members[k], mp.partition, mp.thresholds[k] + 50);
      REQUIRE((last ? *last + 1 : 0) == mp.thresholds[k]);
    }
  }
}
