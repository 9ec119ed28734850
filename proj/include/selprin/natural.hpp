#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace selprin {

/// Arbitrary-precision integer used for every sequence value. Values of
/// sequences are naturals; differences between them may go negative, so the
/// underlying type is signed.
using Natural = boost::multiprecision::cpp_int;

/// Positions in ℕ that are actually visited (sequence indices, set members,
/// cover indices) fit in a machine word.
using Index = std::uint64_t;

Index to_index(const Natural& v);

inline std::string to_string(const Natural& v) { return v.str(); }

inline Index lcm_index(Index a, Index b) { return std::lcm(a, b); }

}  // namespace selprin
