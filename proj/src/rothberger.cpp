#include "selprin/rothberger.hpp"

#include <set>

#include "selprin/errors.hpp"

namespace selprin {

FunFamily::FunFamily(std::vector<EPSet> m, std::vector<std::string> l)
    : members(std::move(m)), labels(std::move(l)) {
  if (members.empty()) throw EmptyFamily("family must have at least one member");
  if (members.size() != labels.size())
    throw std::invalid_argument("every member needs a label");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw std::invalid_argument("family labels must be unique");
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!members[i].infinite())
      throw FiniteSetError("member " + labels[i] + " is finite");
}

EPCover build_rothberger_cover(const FunFamily& y) {
  Index start = 0, period = 1;
  for (const auto& a : y.members) {
    start = std::max(start, a.prefix_length());
    period = lcm_index(period, a.period());
  }
  PointSpace space(y.labels);
  for (std::size_t i = 0; i < y.members.size(); ++i)
    space.realization.emplace(y.labels[i], y.members[i]);
  auto trace = [&](Index n) {
    PointSet t = space.none();
    for (std::size_t i = 0; i < y.members.size(); ++i)
      if (y.members[i].contains(n)) t.set(i);
    return t;
  };
  std::vector<PointSet> prefix, cycle;
  for (Index n = 0; n < start; ++n) prefix.push_back(trace(n));
  for (Index n = start; n < start + period; ++n) cycle.push_back(trace(n));
  return EPCover(std::move(space), std::move(prefix), std::move(cycle));
}

MemberPartition witness_to_partition(const FunFamily& y,
                                     const GroupabilityWitness& w) {
  const EPCover cover = build_rothberger_cover(y);
  ThresholdReport report;
  try {
    report = verify_witness(cover, w);
  } catch (const NotAPartitionError& e) {
    throw InvalidWitnessError(e.what());
  }
  if (!report.all_ok()) {
    for (const auto& p : report.points)
      if (!p.ok)
        throw InvalidWitnessError("witness fails for member " + p.point);
  }
  MemberPartition out{w.partition, {}};
  // The occurrence set of a member in the O_n cover is the member itself, so
  // the minimal cover thresholds are the hitting thresholds.
  for (const auto& p : report.points) {
    if (!p.minimal) throw InvalidWitnessError("no threshold for " + p.point);
    out.thresholds.push_back(*p.minimal);
  }
  return out;
}

SlalomCheck partition_to_slalom_check(const FunFamily& y,
                                      const BlockPartition& p) {
  SlalomCheck out{slalom_from_partition(p), {}};
  for (std::size_t i = 0; i < y.members.size(); ++i) {
    const EPSeq f = increasing_enum(y.members[i]);
    if (!p.certified()) {
      out.verdicts.push_back(goes_through_at_horizon(f, out.slalom, 10000));
      continue;
    }
    const EPSet hits = p.hit_pattern(y.members[i]);
    if (!hits.cofinite()) {
      ThroughVerdict v;
      v.miss_note = "member " + y.labels[i] + " misses infinitely many blocks";
      out.verdicts.push_back(v);
      continue;
    }
    const auto last = hits.last_absent();
    out.verdicts.push_back(through_from_partition(f, out.slalom, last ? *last + 1 : 0));
  }
  return out;
}

PipelineReport b_pipeline(const FunFamily& y) {
  const EPCover cover = build_rothberger_cover(y);
  GroupResult grouping = group_cover(cover);
  std::vector<std::string> diagnostics;
  diagnostics.push_back("cover: prefix " + std::to_string(cover.prefix_length()) +
                        ", period " + std::to_string(cover.period()));
  diagnostics.push_back("grouping: " +
                        std::to_string(grouping.trace.productive_steps()) +
                        " productive step(s), " +
                        std::to_string(grouping.trace.steps.size()) + " recorded");
  MemberPartition partition = witness_to_partition(y, grouping.witness);
  SlalomCheck check = partition_to_slalom_check(y, partition.partition);

  PipelineReport report{std::move(grouping), std::move(partition), check.slalom,
                        bound_sequence(check.slalom), {}, std::move(check.verdicts),
                        {}, std::move(diagnostics), true};
  for (std::size_t i = 0; i < y.members.size(); ++i) {
    report.enumerations.push_back(increasing_enum(y.members[i]));
    const ThroughVerdict& through = report.through[i];
    if (!through.holds) {
      report.ok = false;
      report.dominance.push_back(DominanceVerdict{});
      report.diagnostics.push_back("member " + y.labels[i] +
                                   " does not go through the slalom: " +
                                   through.miss_note);
      continue;
    }
    report.dominance.push_back(
        dominated_by_bound(report.enumerations.back(), through, report.slalom));
    if (!report.dominance.back().holds) {
      report.ok = false;
      report.diagnostics.push_back("member " + y.labels[i] +
                                   " is not dominated by the bound: " +
                                   report.dominance.back().witness_note);
    }
  }
  return report;
}

}  // namespace selprin
