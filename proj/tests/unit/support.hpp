#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "selprin/epseq.hpp"
#include "selprin/epset.hpp"

namespace support {

using selprin::EPSeq;
using selprin::EPSet;
using selprin::Index;
using selprin::Natural;

inline std::vector<Natural> nats(std::initializer_list<long long> xs) {
  std::vector<Natural> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

// Term-by-term accumulation straight from the description.
inline std::vector<Natural> naive_terms(const EPSeq& s, Index count) {
  const auto& p = s.prefix();
  const auto& c = s.cycle();
  std::vector<Natural> out;
  for (Index n = 0; n < count; ++n) {
    if (n < p.size())
      out.push_back(p[n]);
    else if (s.kind() == selprin::TailKind::Values)
      out.push_back(c[(n - p.size()) % c.size()]);
    else
      out.push_back(out.back() + c[(n - p.size()) % c.size()]);
  }
  return out;
}

inline bool naive_member(const EPSet& a, Index n) {
  if (n < a.prefix().size()) return a.prefix()[n];
  return a.cycle()[(n - a.prefix().size()) % a.cycle().size()];
}

inline std::vector<Index> naive_members_below(const EPSet& a, Index bound) {
  std::vector<Index> out;
  for (Index n = 0; n < bound; ++n)
    if (naive_member(a, n)) out.push_back(n);
  return out;
}

inline EPSet bits(std::initializer_list<int> prefix, std::initializer_list<int> cycle) {
  return EPSet(std::vector<bool>(prefix.begin(), prefix.end()),
               std::vector<bool>(cycle.begin(), cycle.end()));
}

inline EPSeq inc(std::initializer_list<long long> prefix,
                 std::initializer_list<long long> cycle) {
  return EPSeq::increments(nats(prefix), nats(cycle));
}

inline EPSeq val(std::initializer_list<long long> prefix,
                 std::initializer_list<long long> cycle) {
  return EPSeq::values(nats(prefix), nats(cycle));
}

}  // namespace support
