#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selprin/natural.hpp"

namespace selprin {

struct AgreementTally {
  std::string check;
  Index agree = 0;
  std::vector<std::string> disagreements;  // one line per instance
};

/// Runs `count` seeded random instances per check (le-star, through, large)
/// through both the exact decision and its horizon oracle. The horizon is the
/// alignment index plus four periods plus 64 positions; the oracle fails a
/// check when a violation lies within the last period.
std::vector<AgreementTally> cross_check(std::uint64_t seed, Index count);

}  // namespace selprin
