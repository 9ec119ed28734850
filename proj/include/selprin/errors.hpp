#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace selprin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteSetError : public Error {
 public:
  using Error::Error;
};

class NotIncreasingError : public Error {
 public:
  using Error::Error;
};

// Raised when a result would leave the eventually periodic class (for example
// the diagonal map applied to an unbounded sequence).
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NotLargeError : public Error {
 public:
  NotLargeError(std::vector<std::string> points);
  const std::vector<std::string>& points() const { return points_; }

 private:
  std::vector<std::string> points_;
};

class NotAPartitionError : public Error {
 public:
  using Error::Error;
};

class DomainOverlapError : public Error {
 public:
  using Error::Error;
};

class NotSurjectiveError : public Error {
 public:
  using Error::Error;
};

class InternalTerminationError : public Error {
 public:
  using Error::Error;
};

class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

class HorizonMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& name);
};

}  // namespace selprin
