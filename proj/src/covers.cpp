#include "selprin/covers.hpp"

#include <algorithm>
#include <set>

#include "selprin/errors.hpp"

namespace selprin {

PointSpace::PointSpace(std::vector<std::string> ids) : points(std::move(ids)) {
  if (points.empty()) throw std::invalid_argument("point space must be nonempty");
  std::set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size())
    throw std::invalid_argument("point ids must be unique");
}

Index PointSpace::index_of(const std::string& id) const {
  auto it = std::find(points.begin(), points.end(), id);
  if (it == points.end()) throw UnknownNameError(id);
  return it - points.begin();
}

PointSet PointSpace::make_set(const std::vector<std::string>& ids) const {
  PointSet s = none();
  for (const auto& id : ids) s.set(index_of(id));
  return s;
}

std::vector<std::string> PointSpace::names(const PointSet& s) const {
  std::vector<std::string> out;
  for (Index i = 0; i < size(); ++i)
    if (s.test(i)) out.push_back(points[i]);
  return out;
}

EPCover::EPCover(PointSpace space, std::vector<PointSet> prefix,
                 std::vector<PointSet> cycle)
    : space_(std::move(space)), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("cover cycle must be nonempty");
  for (auto* list : {&prefix_, &cycle_})
    for (const auto& t : *list)
      if (t.size() != space_.size())
        throw std::invalid_argument("trace does not match the point space");
}

const PointSet& EPCover::trace(Index n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

EPSet EPCover::occurrences(Index point) const {
  return EPSet::from_predicate(prefix_length(), period(),
                               [&](Index n) { return trace(n).test(point); });
}

LargenessReport is_large(const EPCover& c) {
  LargenessReport r;
  for (Index x = 0; x < c.space().size(); ++x) {
    // Cycle members recur forever, so largeness is membership in some cycle
    // trace.
    const bool large = std::any_of(c.cycle().begin(), c.cycle().end(),
                                   [x](const PointSet& t) { return t.test(x); });
    r.per_point.push_back(large);
    if (!large) {
      r.large = false;
      r.finite_multiplicity_points.push_back(c.space().points[x]);
      r.finite_multiplicities.push_back(std::count_if(
          c.prefix().begin(), c.prefix().end(),
          [x](const PointSet& t) { return t.test(x); }));
    }
  }
  return r;
}

std::vector<TraceClass> equiv_classes(const EPCover& c, const PointSet& sub,
                                      const EPSet& idx) {
  const Index start = std::max(c.prefix_length(), idx.prefix_length());
  const Index period = lcm_index(c.period(), idx.period());
  const Index window = start + period;

  std::vector<PointSet> keys;
  std::vector<std::optional<Index>> class_of(window);
  for (Index n = 0; n < window; ++n) {
    if (!idx.contains(n)) continue;
    const PointSet key = c.trace(n) & sub;
    auto it = std::find(keys.begin(), keys.end(), key);
    class_of[n] = it - keys.begin();
    if (it == keys.end()) keys.push_back(key);
  }

  std::vector<TraceClass> out;
  for (Index k = 0; k < keys.size(); ++k) {
    EPSet indices = EPSet::from_predicate(start, period, [&](Index n) {
      return class_of[n] == k;
    });
    const bool infinite = indices.infinite();
    out.push_back(TraceClass{keys[k], std::move(indices), infinite});
  }
  return out;
}

OneStep onestep(const EPCover& c, const PointSet& sub, const EPSet& idx) {
  const Index start = std::max(c.prefix_length(), idx.prefix_length());
  const Index period = lcm_index(c.period(), idx.period());
  PointSet recurring = c.space().none();
  for (Index n = start; n < start + period; ++n)
    if (idx.contains(n)) recurring |= c.trace(n);
  const PointSet missing = sub - recurring;
  if (missing.any()) throw NotLargeError(c.space().names(missing));

  std::vector<EPSet> infinite_classes;
  EPSet infinite_part = EPSet::none();
  PointSet covered = c.space().none();
  for (auto& cls : equiv_classes(c, sub, idx)) {
    if (!cls.infinite) continue;
    infinite_part = infinite_part | cls.indices;
    covered |= cls.trace;
    infinite_classes.push_back(std::move(cls.indices));
  }
  return OneStep{infinite_part, covered,
                 BlockPartition::diagonal(std::move(infinite_classes)),
                 idx - infinite_part};
}

BlockPartition merge_partitions(std::vector<BlockPartition> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!(parts[i].domain() & parts[j].domain()).empty())
        throw DomainOverlapError("partitions " + std::to_string(i) + " and " +
                                 std::to_string(j) + " share indices");
  return BlockPartition::merged(std::move(parts));
}

Index RefinementTrace::productive_steps() const {
  return std::count_if(steps.begin(), steps.end(), [](const RefinementStep& s) {
    return !s.infinite_part.empty();
  });
}

std::map<std::string, std::optional<Index>> minimal_thresholds(
    const EPCover& c, const BlockPartition& p) {
  std::map<std::string, std::optional<Index>> out;
  for (Index x = 0; x < c.space().size(); ++x) {
    const EPSet hits = p.hit_pattern(c.occurrences(x));
    std::optional<Index> t;
    if (hits.cofinite()) {
      const auto last = hits.last_absent();
      t = last ? *last + 1 : 0;
    }
    out[c.space().points[x]] = t;
  }
  return out;
}

GroupResult group_cover(const EPCover& c) {
  const LargenessReport largeness = is_large(c);
  if (!largeness.large) throw NotLargeError(largeness.finite_multiplicity_points);

  GroupResult result{GroupabilityWitness{BlockPartition::empty(), {}}, {}};
  std::vector<BlockPartition> groupings;
  PointSet space = c.space().all();
  PointSet covered = c.space().none();
  EPSet indices = EPSet::naturals();
  const Index step_limit = c.space().size() + 2;
  bool finished = false;
  for (Index step = 0; step < step_limit; ++step) {
    space -= covered;
    OneStep s = onestep(c, space, indices);
    result.trace.steps.push_back(
        RefinementStep{indices, space, s.infinite_part, s.covered});
    if (s.infinite_part.empty()) {
      finished = true;
      break;
    }
    groupings.push_back(std::move(s.grouping));
    indices = s.residual;
    covered = s.covered;
  }
  if (!finished)
    throw InternalTerminationError("grouping did not settle within " +
                                   std::to_string(step_limit) + " steps");
  // No infinite class left means the remaining indices are finite.
  if (indices.infinite())
    throw InternalTerminationError("infinite index set left ungrouped");

  BlockPartition partition = merge_partitions(std::move(groupings));
  if (!indices.empty()) partition = BlockPartition::absorbed(partition, indices);

  for (const auto& [point, t] : minimal_thresholds(c, partition)) {
    if (!t) throw InternalTerminationError("point " + point + " is not grouped");
    result.witness.thresholds[point] = *t;
  }
  result.witness.partition = std::move(partition);
  return result;
}

bool ThresholdReport::all_ok() const {
  return std::all_of(points.begin(), points.end(),
                     [](const PointThreshold& p) { return p.ok; });
}

ThresholdReport verify_witness(const EPCover& c, const GroupabilityWitness& w,
                               Index horizon) {
  w.partition.check(horizon);
  if (!(w.partition.domain() == EPSet::naturals()))
    throw NotAPartitionError("witness partition does not cover every index");

  ThresholdReport report;
  report.exact = w.partition.certified();
  report.horizon = report.exact ? 0 : horizon;
  for (Index x = 0; x < c.space().size(); ++x) {
    PointThreshold pt;
    pt.point = c.space().points[x];
    if (auto it = w.thresholds.find(pt.point); it != w.thresholds.end())
      pt.claimed = it->second;
    const EPSet occ = c.occurrences(x);
    const Index from = pt.claimed.value_or(0);
    if (report.exact) {
      const EPSet hits = w.partition.hit_pattern(occ);
      if (hits.cofinite()) {
        const auto last = hits.last_absent();
        pt.minimal = last ? *last + 1 : 0;
      }
      pt.failure_index = hits.next_absent_at_or_after(from);
    } else {
      const auto hits = w.partition.hit_prefix(occ, horizon);
      std::optional<Index> last_miss;
      for (Index n = 0; n < horizon; ++n)
        if (!hits[n]) {
          last_miss = n;
          if (n >= from && !pt.failure_index) pt.failure_index = n;
        }
      if (!last_miss || *last_miss + 1 < horizon)
        pt.minimal = last_miss ? *last_miss + 1 : 0;
    }
    pt.ok = pt.claimed && !pt.failure_index;
    report.points.push_back(std::move(pt));
  }
  return report;
}

GroupabilityWitness absorb_leftovers(const GroupabilityWitness& w,
                                     const EPSet& leftover) {
  if (leftover.empty()) return w;
  return GroupabilityWitness{BlockPartition::absorbed(w.partition, leftover),
                             w.thresholds};
}

EPCover extend_to_superspace(const EPCover& c,
                             const std::vector<std::string>& extra) {
  std::vector<std::string> ids = c.space().points;
  for (const auto& id : extra) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end())
      throw DomainOverlapError("point " + id + " already belongs to the space");
    ids.push_back(id);
  }
  PointSpace space(std::move(ids));
  space.realization = c.space().realization;
  const Index old_size = c.space().size();
  auto widen = [&](const std::vector<PointSet>& traces) {
    std::vector<PointSet> out;
    for (PointSet t : traces) {
      t.resize(space.size());
      for (Index i = old_size; i < space.size(); ++i) t.set(i);
      out.push_back(std::move(t));
    }
    return out;
  };
  return EPCover(std::move(space), widen(c.prefix()), widen(c.cycle()));
}

GroupabilityWitness restrict_witness(const GroupabilityWitness& w,
                                     const PointSpace& space) {
  GroupabilityWitness out{w.partition, {}};
  for (const auto& id : space.points)
    if (auto it = w.thresholds.find(id); it != w.thresholds.end())
      out.thresholds[id] = it->second;
  return out;
}

EPCover pullback_cover(const PointMap& f, const PointSpace& domain,
                       const EPCover& c) {
  const PointSpace& target = c.space();
  std::vector<Index> image(domain.size());
  PointSet hit = target.none();
  for (Index x = 0; x < domain.size(); ++x) {
    auto it = f.find(domain.points[x]);
    if (it == f.end())
      throw NotSurjectiveError("map is undefined at " + domain.points[x]);
    image[x] = target.index_of(it->second);
    hit.set(image[x]);
  }
  if (!hit.all())
    throw NotSurjectiveError("map misses " + target.names(~hit).front());
  auto pull = [&](const std::vector<PointSet>& traces) {
    std::vector<PointSet> out;
    for (const auto& t : traces) {
      PointSet p = domain.none();
      for (Index x = 0; x < domain.size(); ++x)
        if (t.test(image[x])) p.set(x);
      out.push_back(std::move(p));
    }
    return out;
  };
  return EPCover(domain, pull(c.prefix()), pull(c.cycle()));
}

GroupabilityWitness push_forward_witness(const PointMap& f,
                                         const GroupabilityWitness& w,
                                         const PointSpace& target) {
  GroupabilityWitness out{w.partition, {}};
  for (const auto& [x, t] : w.thresholds) {
    auto it = f.find(x);
    if (it == f.end()) continue;
    target.index_of(it->second);
    auto [slot, fresh] = out.thresholds.emplace(it->second, t);
    if (!fresh) slot->second = std::max(slot->second, t);
  }
  return out;
}

}  // namespace selprin
