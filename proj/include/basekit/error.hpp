#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace basekit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, group files or catalog specs.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (non-solvable where solvable is
/// required, H not a subgroup of G, degree mismatch, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A configured scan or search budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Group closure grew past the enumeration cap.
class SizeExceeded : public BudgetExceeded {
 public:
  SizeExceeded(const std::string& what, std::uint64_t partial_count)
      : BudgetExceeded(what), partial_count_(partial_count) {}

  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

}  // namespace basekit
