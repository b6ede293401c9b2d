#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncpb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (shape mismatch, wrong group, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An element that was required to be a unit is not invertible.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured enumeration budget.
/// Searches refuse instead of sampling, so callers can tell "no" from "too big".
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Malformed serialized input; the message names the offending JSON path.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what) : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Default cap on enumerated candidates for brute-force searches (2^24).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

}  // namespace ncpb
