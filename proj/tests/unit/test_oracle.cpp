#include "selprin/crosscheck.hpp"
#include "selprin/errors.hpp"
#include "selprin/oracle.hpp"
#include "support.hpp"

using namespace selprin;
using namespace selprin::oracle;
using support::nats;

namespace {

FinSeq linear(long long a, long long b, Index count) {
  FinSeq out;
  for (Index n = 0; n < count; ++n) out.emplace_back(a * static_cast<long long>(n) + b);
  return out;
}

Traces periodic_traces(const std::vector<std::vector<bool>>& cycle, Index n) {
  Traces t;
  for (Index m = 0; m < n; ++m) t.push_back(cycle[m % cycle.size()]);
  return t;
}

}  // namespace

TEST_CASE("pointwise dominance at a horizon") {
  const auto v = check_le_star_h(linear(1, 5, 20), linear(2, 0, 20));
  CHECK(v.holds());
  CHECK(v.threshold == 5);
  CHECK(v.horizon == 20);
  const auto w = check_le_star_h(linear(2, 0, 20), linear(1, 0, 20));
  CHECK_FALSE(w.holds());
  CHECK(w.counterexample == 19u);
  CHECK_THROWS_AS(check_le_star_h(linear(1, 0, 5), linear(1, 0, 6)), HorizonMismatch);
}

TEST_CASE("interval scan at a horizon") {
  const auto a = check_through_h(linear(2, 0, 60), linear(3, 0, 30));
  CHECK(a.holds());
  CHECK(a.threshold == 0);
  const auto b = check_through_h(linear(4, 0, 30), linear(2, 0, 50), 2);
  CHECK_FALSE(b.holds());
  CHECK(*b.counterexample % 2 == 1);
  const auto c = check_through_h(linear(3, 1, 30), linear(3, 1, 30));
  CHECK(c.holds());
  CHECK(c.threshold == 0);
}

TEST_CASE("greedy slaloms") {
  const auto a = greedy_slalom_h({linear(3, 0, 20)}, 0);
  REQUIRE(a);
  CHECK(FinSeq(a->begin(), a->begin() + 5) == nats({0, 1, 4, 7, 10}));
  const auto b = greedy_slalom_h({linear(1, 0, 20)}, 0);
  REQUIRE(b);
  CHECK(FinSeq(b->begin(), b->begin() + 4) == nats({0, 1, 2, 3}));
  const auto c = greedy_slalom_h({linear(2, 0, 20), linear(2, 1, 20)}, 0);
  REQUIRE(c);
  CHECK(FinSeq(c->begin(), c->begin() + 4) == nats({0, 2, 4, 6}));
  CHECK_THROWS_AS(greedy_slalom_h({}, 0), EmptyFamily);
  for (const auto& y : {linear(2, 0, 20), linear(2, 1, 20)})
    CHECK(check_through_h(y, *c).holds());
}

TEST_CASE("multiplicities at a horizon") {
  const auto r = check_large_h(periodic_traces({{true, false}, {false, true}}, 10), 2, 2);
  CHECK(r.multiplicity == std::vector<Index>{5, 5});
  CHECK(r.large == std::vector<bool>{true, true});
  Traces once = periodic_traces({{false, true}}, 10);
  once[0][0] = true;
  const auto s = check_large_h(once, 2, 1);
  CHECK(s.multiplicity == std::vector<Index>{1, 10});
  CHECK(s.large == std::vector<bool>{false, true});
}

TEST_CASE("witness scan at a horizon") {
  const Traces t = periodic_traces({{true, false}, {true, true}}, 12);
  const FinBlocks good{{0}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}};
  const auto ok = check_witness_h(t, 2, good);
  CHECK(ok[0].holds());
  CHECK(ok[0].threshold == 0);
  CHECK(ok[1].threshold == 1);
  FinBlocks broken = good;
  broken[3] = {6};
  const auto bad = check_witness_h(t, 2, broken);
  CHECK(bad[1].counterexample == 3u);
}

TEST_CASE("exhaustive groupability") {
  const Traces t = periodic_traces({{true, false}, {true, true}}, 8);
  for (auto mode : {SearchMode::Consecutive, SearchMode::Arbitrary}) {
    const auto w = exhaustive_groupability(t, 2, 8, mode);
    REQUIRE(w);
    const auto verdicts = check_witness_h(t, 2, w->blocks, 2);
    for (Index x = 0; x < 2; ++x) {
      CHECK(verdicts[x].holds());
      CHECK(verdicts[x].threshold <= w->thresholds[x]);
    }
  }
  Traces missing = periodic_traces({{true, false}}, 8);
  missing[0][1] = true;
  CHECK_FALSE(exhaustive_groupability(missing, 2, 8, SearchMode::Arbitrary));
  const auto single = exhaustive_groupability(periodic_traces({{true}}, 4), 1, 4,
                                              SearchMode::Consecutive);
  REQUIRE(single);
  CHECK(single->blocks == FinBlocks{{0}, {1}, {2}, {3}});
  CHECK_THROWS_AS(exhaustive_groupability(periodic_traces({{true}}, 12), 1, 12,
                                          SearchMode::Arbitrary, 2, 10),
                  SearchBudgetExceeded);
}

TEST_CASE("exact checks agree with the oracles") {
  for (const auto& tally : cross_check(3, 300)) {
    INFO(tally.check);
    CHECK(tally.agree == 300);
    CHECK(tally.disagreements.empty());
  }
}
