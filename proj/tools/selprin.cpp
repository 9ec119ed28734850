// Command-line front end: parses instance files, dispatches subcommands and
// prints plain-text reports. Exit codes: 0 success, 1 failed mathematical
// check, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "selprin/covers.hpp"
#include "selprin/crosscheck.hpp"
#include "selprin/errors.hpp"
#include "selprin/generate.hpp"
#include "selprin/oracle.hpp"
#include "selprin/rothberger.hpp"
#include "selprin/slalom.hpp"
#include "selprin/text.hpp"

namespace {

using namespace selprin;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  Index horizon = 10000;
  std::uint64_t seed = 1;
};

struct OracleFlags {
  Index window = 0;  // 0: one position, or one cover period for `large`
  Index start = 0;
  Index n = 10;
  Index max_blocks = 8;
  std::string mode = "arbitrary";
  Index count = 1000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string join_values(const std::vector<Natural>& values) {
  return render_values(values);
}

// Leading blocks lying entirely below `horizon`.
Index printable_blocks(const BlockPartition& p, Index horizon) {
  const Index bound = p.block_bound(horizon);
  Index n = 0;
  for (; n < bound; ++n) {
    const Block b = p.block(n);
    if (!b.empty() && b.back() >= horizon) break;
  }
  return n;
}

void print_blocks(std::ostream& out, const BlockPartition& p, Index horizon) {
  const Index count = printable_blocks(p, horizon);
  for (Index n = 0; n < count; ++n) {
    out << "block " << n << " :";
    for (Index k : p.block(n)) out << ' ' << k;
    out << '\n';
  }
}

// Boundary terms below `horizon` plus the first one at or past it.
std::vector<Natural> boundary_prefix(const LazySeq& s, Index horizon) {
  return s.take_through(Natural(horizon));
}

std::string through_text(const ThroughVerdict& v) {
  if (!v.holds) return "fails, " + v.miss_note;
  std::string out = "holds, threshold " + std::to_string(v.threshold);
  if (!v.exact) out += " (checked to " + v.horizon.str() + ")";
  return out;
}

std::string dominance_text(const DominanceVerdict& v) {
  if (!v.holds) return "fails, " + v.witness_note;
  return "holds, threshold " + v.threshold.str();
}

std::string horizon_text(const oracle::HorizonVerdict& v, const std::string& unit) {
  std::string out;
  if (v.holds())
    out = "holds-at-horizon, threshold " + std::to_string(v.threshold);
  else
    out = "fails-at-horizon, last violation " + std::to_string(*v.counterexample);
  return out + ", " + unit + " " + std::to_string(v.horizon);
}

EPSeq increasing(const InstanceFile& file, const std::string& name) {
  const EPSeq& s = file.seq(name);
  if (!s.strictly_increasing())
    throw NotIncreasingError("sequence " + name + " is not strictly increasing");
  return s;
}

oracle::Traces materialize(const EPCover& c, Index n) {
  oracle::Traces traces(n, std::vector<bool>(c.space().size()));
  for (Index m = 0; m < n; ++m)
    for (Index x = 0; x < c.space().size(); ++x) traces[m][x] = c.trace(m)[x];
  return traces;
}

void need_args(const std::vector<std::string>& args, std::size_t count,
               const std::string& usage) {
  if (args.size() != count) throw std::invalid_argument("usage: " + usage);
}

int cmd_convert(const Globals& g, const InstanceFile& file, const std::string& what,
                const std::string& name) {
  auto& out = std::cout;
  if (what == "normalize") {
    out << render(name, normalize(file.seq(name))) << '\n';
  } else if (what == "diag") {
    out << render(name + "_inc", diag_to_increasing(file.seq(name))) << '\n';
  } else if (what == "undiag") {
    out << render(name + "_diag", undiag(increasing(file, name))) << '\n';
  } else if (what == "range") {
    out << render(name + "_range", range_encode(increasing(file, name))) << '\n';
  } else if (what == "enum") {
    out << render(name + "_enum", increasing_enum(file.set(name))) << '\n';
  } else if (what == "slalom-from-bound") {
    const Slalom s = slalom_from_bound(increasing(file, name));
    out << "boundary: " << join_values(boundary_prefix(s.boundary, g.horizon)) << '\n';
  } else if (what == "bound-from-slalom") {
    const Slalom s = make_slalom(increasing(file, name));
    out << render(name + "_bound", bound_from_slalom(s)) << '\n';
  } else if (what == "partition-from-slalom") {
    print_blocks(out, partition_from_slalom(make_slalom(increasing(file, name))),
                 g.horizon);
  } else {  // slalom-from-partition
    const Slalom s = slalom_from_partition(file.partition(name));
    out << "boundary: " << join_values(boundary_prefix(s.boundary, g.horizon)) << '\n';
  }
  return kOk;
}

int cmd_check(const InstanceFile& file, const std::string& what,
              const std::vector<std::string>& args) {
  auto& out = std::cout;
  if (what == "le-star") {
    need_args(args, 2, "check FILE le-star F G");
    const auto v = le_star(file.seq(args[0]), file.seq(args[1]));
    out << dominance_text(v) << '\n';
    return v.holds ? kOk : kFailed;
  }
  if (what == "through") {
    need_args(args, 2, "check FILE through F G");
    const auto v = goes_through(increasing(file, args[0]), increasing(file, args[1]));
    out << through_text(v) << '\n';
    return v.holds ? kOk : kFailed;
  }
  if (what == "large") {
    need_args(args, 1, "check FILE large U");
    const auto r = is_large(file.cover(args[0]));
    if (r.large) {
      out << "large\n";
      return kOk;
    }
    out << "not large:";
    for (std::size_t i = 0; i < r.finite_multiplicity_points.size(); ++i)
      out << ' ' << r.finite_multiplicity_points[i] << " (multiplicity "
          << r.finite_multiplicities[i] << ")";
    out << '\n';
    return kFailed;
  }
  // eval
  need_args(args, 2, "check FILE eval F N");
  out << eval(file.seq(args[0]), to_index(Natural(args[1]))) << '\n';
  return kOk;
}

int cmd_group(const Globals& g, const InstanceFile& file, const std::string& name) {
  const EPCover& c = file.cover(name);
  const GroupResult r = group_cover(c);
  std::cout << "cover " << name << ": " << c.space().size() << " point(s), prefix "
            << c.prefix_length() << ", period " << c.period() << '\n'
            << "steps: " << r.trace.steps.size() << " recorded, "
            << r.trace.productive_steps() << " productive\n"
            << render_witness(r.witness, printable_blocks(r.witness.partition, g.horizon));
  return kOk;
}

int cmd_verify(const Globals& g, const InstanceFile& file, const std::string& name,
               const std::string& witness_path) {
  const EPCover& c = file.cover(name);
  const ParsedWitness parsed = parse_witness(read_file(witness_path));
  const Index count = parsed.blocks.size();
  if (count == 0) throw InvalidWitnessError("witness lists no blocks");

  // Indices are covered up to the least one missing from every listed block.
  std::vector<bool> seen;
  for (const auto& b : parsed.blocks)
    for (Index k : b) {
      if (k >= seen.size()) seen.resize(k + 1);
      seen[k] = true;
    }
  Index covered = 0;
  while (covered < seen.size() && seen[covered]) ++covered;
  covered = std::min(covered, g.horizon);

  auto blocks = std::make_shared<std::vector<Block>>(parsed.blocks);
  const BlockPartition p = BlockPartition::generated(
      EPSet::naturals(),
      [blocks](Index n) { return n < blocks->size() ? (*blocks)[n] : Block{}; },
      [count](Index) { return count; });
  p.check(covered);

  const Index horizon = std::max<Index>(1, std::min(count, covered));
  const ThresholdReport report =
      verify_witness(c, GroupabilityWitness{p, parsed.thresholds}, horizon);
  std::cout << "verified over " << horizon << " block(s)\n";
  for (const auto& pt : report.points) {
    std::cout << pt.point << ": claimed "
              << (pt.claimed ? std::to_string(*pt.claimed) : "none") << ", minimal "
              << (pt.minimal ? std::to_string(*pt.minimal) : "none");
    if (pt.failure_index) std::cout << ", missed block " << *pt.failure_index;
    std::cout << (pt.ok ? ", ok" : ", FAILED") << '\n';
  }
  std::cout << (report.all_ok() ? "witness ok" : "witness rejected") << '\n';
  return report.all_ok() ? kOk : kFailed;
}

FunFamily pick_family(const InstanceFile& file, const std::string& name) {
  if (!name.empty()) return file.family(name);
  if (file.families.size() == 1) return file.family(file.families.begin()->first);
  if (!file.families.empty())
    throw std::invalid_argument("several families defined; name one");
  std::vector<EPSet> members;
  std::vector<std::string> labels;
  for (const auto& [kind, n] : file.order)
    if (kind == DefKind::Set) {
      members.push_back(file.sets.at(n));
      labels.push_back(n);
    }
  return FunFamily(std::move(members), std::move(labels));
}

int cmd_pipeline(const Globals& g, const InstanceFile& file, const std::string& name,
                 const std::string& emit) {
  const FunFamily y = pick_family(file, name);
  const PipelineReport r = b_pipeline(y);
  auto& out = std::cout;
  auto wants = [&](const char* section) { return emit == "all" || emit == section; };

  out << "family:";
  for (const auto& l : y.labels) out << ' ' << l;
  out << '\n';
  for (const auto& d : r.diagnostics) out << d << '\n';
  if (wants("witness")) {
    out << "witness:\n"
        << render_witness(r.grouping.witness,
                          printable_blocks(r.grouping.witness.partition, g.horizon));
  }
  if (wants("partition")) {
    out << "partition:\n";
    print_blocks(out, r.partition.partition, g.horizon);
    out << "member thresholds:\n";
    for (std::size_t i = 0; i < y.labels.size(); ++i)
      out << "  " << y.labels[i] << ' ' << r.partition.thresholds[i] << '\n';
  }
  if (wants("slalom"))
    out << "slalom: " << join_values(boundary_prefix(r.slalom.boundary, g.horizon))
        << '\n';
  if (wants("bound"))
    out << "bound: " << join_values(boundary_prefix(r.bound, g.horizon)) << '\n';
  for (std::size_t i = 0; i < y.labels.size(); ++i) {
    out << y.labels[i] << ": through " << through_text(r.through[i]);
    if (r.through[i].holds) out << "; dominated " << dominance_text(r.dominance[i]);
    out << '\n';
  }
  out << (r.ok ? "pipeline ok" : "pipeline failed") << '\n';
  return r.ok ? kOk : kFailed;
}

int cmd_crosscheck(const Globals& g, Index count) {
  int status = kOk;
  std::cout << "seed " << g.seed << ", " << count << " instance(s) per check\n";
  for (const auto& t : cross_check(g.seed, count)) {
    std::cout << t.check << ": " << t.agree << " agree, " << t.disagreements.size()
              << " disagree\n";
    for (const auto& d : t.disagreements) std::cout << "  " << d << '\n';
    if (!t.disagreements.empty()) status = kFailed;
  }
  return status;
}

int cmd_oracle(const Globals& g, const OracleFlags& flags,
               const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("usage: oracle FILE CHECK ARGS | oracle crosscheck");
  if (words[0] == "crosscheck") {
    need_args(words, 1, "oracle crosscheck [--seed S] [--count C]");
    return cmd_crosscheck(g, flags.count);
  }
  if (words.size() < 2) throw std::invalid_argument("usage: oracle FILE CHECK ARGS");
  const InstanceFile file = parse_instance(read_file(words[0]));
  const std::string& what = words[1];
  const std::vector<std::string> args(words.begin() + 2, words.end());
  auto& out = std::cout;
  const Index window = std::max<Index>(flags.window, 1);

  if (what == "le-star") {
    need_args(args, 2, "oracle FILE le-star F G");
    const auto v = oracle::check_le_star_h(file.seq(args[0]).take(g.horizon),
                                           file.seq(args[1]).take(g.horizon), window);
    out << horizon_text(v, "positions") << '\n';
    return v.holds() ? kOk : kFailed;
  }
  if (what == "through") {
    need_args(args, 2, "oracle FILE through F G");
    const Natural bound(g.horizon);
    const auto v = oracle::check_through_h(increasing(file, args[0]).take_through(bound),
                                           increasing(file, args[1]).take_through(bound),
                                           window);
    out << horizon_text(v, "intervals") << '\n';
    return v.holds() ? kOk : kFailed;
  }
  if (what == "large") {
    need_args(args, 1, "oracle FILE large U");
    const EPCover& c = file.cover(args[0]);
    const Index w = flags.window ? flags.window : c.period();
    const auto r = oracle::check_large_h(materialize(c, g.horizon), c.space().size(), w);
    bool all = true;
    for (Index x = 0; x < c.space().size(); ++x) {
      out << c.space().points[x] << ": multiplicity " << r.multiplicity[x]
          << (r.large[x] ? ", large-at-horizon" : ", not-large-at-horizon") << '\n';
      all = all && r.large[x];
    }
    out << "indices " << r.horizon << ", window " << w << '\n';
    return all ? kOk : kFailed;
  }
  if (what == "greedy") {
    need_args(args, 1, "oracle FILE greedy FAMILY");
    const FunFamily y = file.family(args[0]);
    std::vector<oracle::FinSeq> ys;
    for (const auto& m : y.members) {
      oracle::FinSeq s;
      for (Index k : m.members_below(g.horizon)) s.push_back(k);
      ys.push_back(std::move(s));
    }
    const auto b = oracle::greedy_slalom_h(ys, Natural(flags.start));
    if (!b) {
      out << "unsat-at-horizon\n";
      return kFailed;
    }
    out << "boundary-at-horizon: " << join_values(*b) << '\n';
    return kOk;
  }
  if (what == "exhaustive") {
    need_args(args, 1, "oracle FILE exhaustive U");
    if (flags.n > 16) throw std::invalid_argument("--n must be at most 16");
    const EPCover& c = file.cover(args[0]);
    const auto mode = flags.mode == "consecutive" ? oracle::SearchMode::Consecutive
                                                  : oracle::SearchMode::Arbitrary;
    const auto w = oracle::exhaustive_groupability(materialize(c, flags.n), c.space().size(),
                                                   flags.max_blocks, mode);
    if (!w) {
      out << "unsat-at-horizon\n";
      return kFailed;
    }
    for (std::size_t n = 0; n < w->blocks.size(); ++n) {
      out << "block " << n << " :";
      for (Index k : w->blocks[n]) out << ' ' << k;
      out << '\n';
    }
    out << "thresholds:\n";
    for (Index x = 0; x < c.space().size(); ++x)
      out << "  " << c.space().points[x] << ' ' << w->thresholds[x] << '\n';
    return kOk;
  }
  throw std::invalid_argument("unknown oracle check '" + what + "'");
}

int cmd_gen(const Globals& g, const std::string& kind, Index count) {
  InstanceGenerator gen(g.seed);
  auto& out = std::cout;
  out << "# seed " << g.seed << ", kind " << kind << '\n';
  for (Index i = 0; i < count; ++i) {
    const std::string id = std::to_string(i);
    if (kind == "epseq") {
      out << render("s" + id, gen.any_seq()) << '\n';
    } else if (kind == "increasing") {
      out << render("s" + id, gen.increasing_seq()) << '\n';
    } else if (kind == "epset") {
      out << render("e" + id, gen.any_set()) << '\n';
    } else if (kind == "cover") {
      out << render("U" + id, gen.cover(5)) << '\n';
    } else if (kind == "partition") {
      PeriodicShape shape = gen.periodic_partition();
      out << render("P" + id, shape) << '\n';
    } else {  // family
      const FunFamily y = gen.family(10);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < y.members.size(); ++k) {
        names.push_back("f" + id + "_" + y.labels[k]);
        out << render(names.back(), y.members[k]) << '\n';
      }
      out << render_family("F" + id, names) << '\n';
    }
  }
  return kOk;
}

int dispatch(std::vector<std::string> args);

int cmd_run(const Globals& g, const std::string& path) {
  const InstanceFile file = parse_instance(read_file(path));
  if (!file.directive) throw std::invalid_argument(path + " has no run directive");
  std::vector<std::string> args = *file.directive;
  if (args[0] == "run" || args[0] == "gen")
    throw std::invalid_argument("directive cannot be '" + args[0] + "'");
  if (!(args[0] == "oracle" && args.size() > 1 && args[1] == "crosscheck"))
    args.insert(args.begin() + 1, path);
  args.push_back("--horizon");
  args.push_back(std::to_string(g.horizon));
  args.push_back("--seed");
  args.push_back(std::to_string(g.seed));
  return dispatch(std::move(args));
}

int dispatch(std::vector<std::string> args) {
  CLI::App app{"Eventually periodic sequences, slaloms and groupable covers."};
  app.name("selprin");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--horizon", g.horizon, "Truncation horizon for printed and checked data")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();

  std::string file, what, name, extra, emit = "all", kind = "epseq";
  std::vector<std::string> rest;
  OracleFlags flags;
  Index gen_count = 1;

  auto* convert = app.add_subcommand("convert", "Sequence and slalom conversions");
  convert->add_option("file", file)->required();
  convert->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"normalize", "diag", "undiag", "range", "enum",
                             "slalom-from-bound", "bound-from-slalom",
                             "partition-from-slalom", "slalom-from-partition"}));
  convert->add_option("name", name)->required();

  auto* check = app.add_subcommand("check", "Exact decisions");
  check->add_option("file", file)->required();
  check->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"le-star", "through", "large", "eval"}));
  check->add_option("args", rest)->required();

  auto* group = app.add_subcommand("group", "Group a large cover");
  group->add_option("file", file)->required();
  group->add_option("cover", name)->required();

  auto* verify = app.add_subcommand("verify", "Verify a witness file against a cover");
  verify->add_option("file", file)->required();
  verify->add_option("cover", name)->required();
  verify->add_option("witness", extra)->required();

  auto* pipeline = app.add_subcommand("pipeline", "Family to slalom and bound");
  pipeline->add_option("file", file)->required();
  pipeline->add_option("family", name);
  pipeline->add_option("--emit", emit)
      ->check(CLI::IsMember({"witness", "partition", "slalom", "bound", "all"}))
      ->capture_default_str();

  auto* orc = app.add_subcommand("oracle", "Horizon oracles and cross-checks");
  orc->add_option("args", rest)->required();
  orc->add_option("--window", flags.window, "Trailing positions that must be clean");
  orc->add_option("--start", flags.start, "Greedy start value");
  orc->add_option("--n", flags.n, "Indices materialized for exhaustive search");
  orc->add_option("--max-blocks", flags.max_blocks)->capture_default_str();
  orc->add_option("--mode", flags.mode)
      ->check(CLI::IsMember({"consecutive", "arbitrary"}))
      ->capture_default_str();
  orc->add_option("--count", flags.count)->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Print random instances");
  gen->add_option("--kind", kind)
      ->check(CLI::IsMember({"epseq", "increasing", "epset", "cover", "family", "partition"}))
      ->capture_default_str();
  gen->add_option("--count", gen_count)->capture_default_str();

  auto* run = app.add_subcommand("run", "Execute the directive line of a file");
  run->add_option("file", file)->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  if (app.got_subcommand(convert))
    return cmd_convert(g, parse_instance(read_file(file)), what, name);
  if (app.got_subcommand(check)) return cmd_check(parse_instance(read_file(file)), what, rest);
  if (app.got_subcommand(group)) return cmd_group(g, parse_instance(read_file(file)), name);
  if (app.got_subcommand(verify))
    return cmd_verify(g, parse_instance(read_file(file)), name, extra);
  if (app.got_subcommand(pipeline))
    return cmd_pipeline(g, parse_instance(read_file(file)), name, emit);
  if (app.got_subcommand(orc)) return cmd_oracle(g, flags, rest);
  if (app.got_subcommand(gen)) return cmd_gen(g, kind, gen_count);
  return cmd_run(g, file);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dispatch(std::move(args));
  } catch (const NotLargeError& e) {
    std::cout << e.what() << '\n';
    return kFailed;
  } catch (const NotAPartitionError& e) {
    std::cout << "not a partition: " << e.what() << '\n';
    return kFailed;
  } catch (const InvalidWitnessError& e) {
    std::cout << "invalid witness: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
