#include "selprin/text.hpp"

#include <cctype>
#include <sstream>

#include "selprin/errors.hpp"

namespace selprin {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{' || c == '}') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '{' && line[i] != '}' && line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
      return false;
  return true;
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line, std::size_t eol)
      : tokens_(std::move(tokens)), line_(line), eol_(eol) {}

  bool done() const { return pos_ == tokens_.size(); }

  const std::string& peek() const {
    static const std::string none;
    return done() ? none : tokens_[pos_].text;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(line_, done() ? eol_ : tokens_[pos_].column, expected);
  }

  void expect(const std::string& word) {
    if (peek() != word) fail("'" + word + "'");
    ++pos_;
  }

  std::string name() {
    if (done() || !is_name(peek())) fail("a name");
    return tokens_[pos_++].text;
  }

  Natural number() {
    if (done() || !is_number(peek())) fail("a natural number");
    return Natural(tokens_[pos_++].text);
  }

  std::vector<Natural> numbers() {
    std::vector<Natural> out;
    while (!done() && is_number(peek())) out.push_back(number());
    return out;
  }

  std::vector<bool> bits() {
    std::vector<bool> out;
    while (!done() && (peek() == "0" || peek() == "1")) out.push_back(tokens_[pos_++].text == "1");
    if (!done() && is_number(peek())) fail("a bit (0 or 1)");
    return out;
  }

  // { word… }
  std::vector<std::string> braced() {
    expect("{");
    std::vector<std::string> out;
    while (!done() && peek() != "}") {
      if (peek() == "{") fail("'}'");
      out.push_back(tokens_[pos_++].text);
    }
    expect("}");
    return out;
  }

  std::vector<std::vector<std::string>> braced_list() {
    std::vector<std::vector<std::string>> out;
    while (peek() == "{") out.push_back(braced());
    return out;
  }

  void finish() {
    if (!done()) fail("end of line");
  }

  std::vector<std::string> rest() {
    std::vector<std::string> out;
    while (!done()) out.push_back(tokens_[pos_++].text);
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t eol_;
};

Block to_block(const std::vector<std::string>& words, LineParser& p) {
  Block b;
  for (const auto& w : words) {
    if (!is_number(w)) p.fail("an index inside braces");
    b.push_back(to_index(Natural(w)));
  }
  std::sort(b.begin(), b.end());
  return b;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string join_bits(const std::vector<bool>& bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ' ';
    out += bits[i] ? '1' : '0';
  }
  return out;
}

std::string braced(const std::vector<std::string>& ids) {
  return "{" + join(ids) + "}";
}

// "prefix" plus items, without a trailing space when there are none.
std::string labelled(const std::string& label, const std::string& items) {
  return items.empty() ? label : label + " " + items;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto claim = [&](const std::string& name, DefKind kind, LineParser& p) {
    for (const auto& [_, existing] : file.order)
      if (existing == name) p.fail("a fresh name (" + name + " is already defined)");
    file.order.emplace_back(kind, name);
  };
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    LineParser p(tokenize(line), line_no, line.size() + 1);
    if (p.done()) continue;
    const std::string keyword = p.name();
    if (keyword == "run") {
      if (file.directive) p.fail("a single directive line");
      file.directive = p.rest();
      if (file.directive->empty()) p.fail("a subcommand");
      continue;
    }
    const std::string name = p.name();
    if (keyword == "epseq") {
      p.expect("=");
      p.expect("prefix");
      auto prefix = p.numbers();
      p.expect(";");
      TailKind kind;
      if (p.peek() == "inc-cycle")
        kind = TailKind::Increments;
      else if (p.peek() == "val-cycle")
        kind = TailKind::Values;
      else
        p.fail("'inc-cycle' or 'val-cycle'");
      p.expect(p.peek());
      auto cycle = p.numbers();
      if (cycle.empty()) p.fail("at least one cycle value");
      p.finish();
      claim(name, DefKind::Seq, p);
      file.seqs.emplace(name, EPSeq(std::move(prefix), kind, std::move(cycle)));
    } else if (keyword == "epset") {
      p.expect("=");
      p.expect("prefix");
      auto prefix = p.bits();
      p.expect(";");
      p.expect("cycle");
      auto cycle = p.bits();
      if (cycle.empty()) p.fail("at least one cycle bit");
      p.finish();
      claim(name, DefKind::Set, p);
      file.sets.emplace(name, EPSet(std::move(prefix), std::move(cycle)));
    } else if (keyword == "cover") {
      p.expect("over");
      const auto ids = p.braced();
      for (const auto& id : ids)
        if (!is_name(id)) p.fail("point ids inside braces");
      if (ids.empty()) p.fail("at least one point");
      std::optional<PointSpace> space;
      try {
        space.emplace(ids);
      } catch (const std::invalid_argument&) {
        p.fail("distinct point ids");
      }
      p.expect("=");
      p.expect("prefix");
      const auto prefix = p.braced_list();
      p.expect(";");
      p.expect("cycle");
      const auto cycle = p.braced_list();
      if (cycle.empty()) p.fail("at least one cycle member");
      p.finish();
      auto traces = [&](const auto& lists) {
        std::vector<PointSet> out;
        for (const auto& l : lists) out.push_back(space->make_set(l));
        return out;
      };
      claim(name, DefKind::Cover, p);
      file.covers.emplace(name, EPCover(*space, traces(prefix), traces(cycle)));
    } else if (keyword == "family") {
      p.expect("=");
      std::vector<std::string> members;
      while (!p.done()) members.push_back(p.name());
      if (members.empty()) p.fail("at least one member");
      for (const auto& m : members)
        if (!file.sets.count(m)) throw UnknownNameError(m);
      claim(name, DefKind::Family, p);
      file.families.emplace(name, std::move(members));
    } else if (keyword == "partition") {
      p.expect("=");
      p.expect("prefix");
      PeriodicShape shape;
      for (const auto& b : p.braced_list()) shape.prefix.push_back(to_block(b, p));
      p.expect(";");
      p.expect("cycle");
      for (const auto& b : p.braced_list()) shape.cycle.push_back(to_block(b, p));
      p.expect(";");
      p.expect("shift");
      shape.shift = to_index(p.number());
      p.finish();
      shape.build();  // validates
      claim(name, DefKind::Partition, p);
      file.partitions.emplace(name, std::move(shape));
    } else {
      throw SyntaxError(line_no, 1, "epseq, epset, cover, family, partition or run");
    }
  }
  return file;
}

const EPSeq& InstanceFile::seq(const std::string& name) const {
  auto it = seqs.find(name);
  if (it == seqs.end()) throw UnknownNameError(name);
  return it->second;
}

const EPSet& InstanceFile::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw UnknownNameError(name);
  return it->second;
}

const EPCover& InstanceFile::cover(const std::string& name) const {
  auto it = covers.find(name);
  if (it == covers.end()) throw UnknownNameError(name);
  return it->second;
}

FunFamily InstanceFile::family(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) throw UnknownNameError(name);
  std::vector<EPSet> members;
  for (const auto& m : it->second) members.push_back(set(m));
  return FunFamily(std::move(members), it->second);
}

BlockPartition InstanceFile::partition(const std::string& name) const {
  auto it = partitions.find(name);
  if (it == partitions.end()) throw UnknownNameError(name);
  return it->second.build();
}

std::string render_values(const std::vector<Natural>& values) {
  return join(values);
}

std::string render_block(const Block& b) { return "{" + join(b) + "}"; }

std::string render(const std::string& name, const EPSeq& s) {
  const char* tag = s.kind() == TailKind::Increments ? "inc-cycle" : "val-cycle";
  return "epseq " + name + " = " + labelled("prefix", join(s.prefix())) + " ; " +
         labelled(tag, join(s.cycle()));
}

std::string render(const std::string& name, const EPSet& a) {
  return "epset " + name + " = " + labelled("prefix", join_bits(a.prefix())) + " ; " +
         labelled("cycle", join_bits(a.cycle()));
}

std::string render(const std::string& name, const EPCover& c) {
  const auto& sp = c.space();
  auto sets = [&](const std::vector<PointSet>& xs) {
    std::vector<std::string> parts;
    for (const auto& x : xs) parts.push_back(braced(sp.names(x)));
    return join(parts);
  };
  return "cover " + name + " over " + braced(sp.points) + " = " +
         labelled("prefix", sets(c.prefix())) + " ; " + labelled("cycle", sets(c.cycle()));
}

std::string render_family(const std::string& name,
                          const std::vector<std::string>& members) {
  return "family " + name + " = " + join(members);
}

std::string render(const std::string& name, const PeriodicShape& p) {
  auto blocks = [](const std::vector<Block>& bs) {
    std::vector<std::string> parts;
    for (const auto& b : bs) parts.push_back(render_block(b));
    return join(parts);
  };
  return "partition " + name + " = " + labelled("prefix", blocks(p.prefix)) + " ; " +
         labelled("cycle", blocks(p.cycle)) + " ; shift " + std::to_string(p.shift);
}

std::string render_instance(const InstanceFile& file) {
  std::string out;
  for (const auto& [kind, name] : file.order) {
    switch (kind) {
      case DefKind::Seq: out += render(name, file.seqs.at(name)); break;
      case DefKind::Set: out += render(name, file.sets.at(name)); break;
      case DefKind::Cover: out += render(name, file.covers.at(name)); break;
      case DefKind::Family: out += render_family(name, file.families.at(name)); break;
      case DefKind::Partition: out += render(name, file.partitions.at(name)); break;
    }
    out += '\n';
  }
  if (file.directive) out += "run " + join(*file.directive) + "\n";
  return out;
}

std::string render_witness(const GroupabilityWitness& w, Index count) {
  std::ostringstream os;
  for (Index n = 0; n < count; ++n) {
    const Block b = w.partition.block(n);
    os << "block " << n << " :";
    for (Index k : b) os << ' ' << k;
    os << '\n';
  }
  os << "thresholds:\n";
  for (const auto& [point, t] : w.thresholds) os << "  " << point << ' ' << t << '\n';
  return os.str();
}

ParsedWitness parse_witness(std::string_view text) {
  ParsedWitness out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool in_thresholds = false;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    LineParser p(tokenize(line), line_no, line.size() + 1);
    if (p.done()) continue;
    if (in_thresholds) {
      const std::string point = p.name();
      const Index t = to_index(p.number());
      p.finish();
      if (!out.thresholds.emplace(point, t).second) p.fail("one threshold per point");
      continue;
    }
    if (p.peek() == "thresholds:") {
      p.expect("thresholds:");
      p.finish();
      in_thresholds = true;
      continue;
    }
    p.expect("block");
    const Index n = to_index(p.number());
    if (n != out.blocks.size()) p.fail("block " + std::to_string(out.blocks.size()));
    p.expect(":");
    Block b;
    for (const auto& v : p.numbers()) b.push_back(to_index(v));
    p.finish();
    std::sort(b.begin(), b.end());
    out.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace selprin
