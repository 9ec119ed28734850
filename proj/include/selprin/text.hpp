#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selprin/covers.hpp"
#include "selprin/epseq.hpp"
#include "selprin/generate.hpp"
#include "selprin/rothberger.hpp"

namespace selprin {

enum class DefKind { Seq, Set, Cover, Family, Partition };

/// Named definitions of an instance file, one per line:
///
///   epseq NAME = prefix n… ; inc-cycle n…     (or val-cycle)
///   epset NAME = prefix b… ; cycle b…
///   cover NAME over {id…} = prefix {id…}… ; cycle {id…}…
///   family NAME = epset-name…
///   partition NAME = prefix {n…}… ; cycle {n…}… ; shift n
///   run SUBCOMMAND ARGS…
///
/// `#` starts a comment.
struct InstanceFile {
  std::map<std::string, EPSeq> seqs;
  std::map<std::string, EPSet> sets;
  std::map<std::string, EPCover> covers;
  std::map<std::string, std::vector<std::string>> families;
  std::map<std::string, PeriodicShape> partitions;
  std::vector<std::pair<DefKind, std::string>> order;
  std::optional<std::vector<std::string>> directive;

  const EPSeq& seq(const std::string& name) const;
  const EPSet& set(const std::string& name) const;
  const EPCover& cover(const std::string& name) const;
  FunFamily family(const std::string& name) const;
  BlockPartition partition(const std::string& name) const;
};

InstanceFile parse_instance(std::string_view text);

std::string render(const std::string& name, const EPSeq& s);
std::string render(const std::string& name, const EPSet& a);
std::string render(const std::string& name, const EPCover& c);
std::string render_family(const std::string& name,
                          const std::vector<std::string>& members);
std::string render(const std::string& name, const PeriodicShape& p);
std::string render_instance(const InstanceFile& file);

std::string render_block(const Block& b);
std::string render_values(const std::vector<Natural>& values);

/// `block n : k…` lines for the first `count` blocks, then a `thresholds:`
/// table.
std::string render_witness(const GroupabilityWitness& w, Index count);

struct ParsedWitness {
  std::vector<Block> blocks;
  std::map<std::string, Index> thresholds;
};

ParsedWitness parse_witness(std::string_view text);

}  // namespace selprin
