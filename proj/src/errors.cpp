#include "selprin/errors.hpp"

#include <limits>

#include "selprin/natural.hpp"

namespace selprin {

namespace {

std::string join_points(const std::vector<std::string>& points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

NotLargeError::NotLargeError(std::vector<std::string> points)
    : Error("cover is not large at: " + join_points(points)),
      points_(std::move(points)) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string expected)
    : Error("syntax error at " + std::to_string(line) + ":" +
            std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

UnknownNameError::UnknownNameError(const std::string& name)
    : Error("unknown name '" + name + "'") {}

Index to_index(const Natural& v) {
  if (v < 0 || v > Natural(std::numeric_limits<Index>::max() / 4))
    throw RangeError("value " + v.str() + " is out of index range");
  return v.convert_to<Index>();
}

}  // namespace selprin
