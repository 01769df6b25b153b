#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace digcon {

/// Node-expansion budget shared by every enumeration routine.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// Largest free algebra (in elements) built without an explicit budget.
inline constexpr std::uint64_t kDefaultFreeAlgebraBudget = 50'000;
/// Largest term-operation closure built without an explicit budget.
inline constexpr std::uint64_t kDefaultTermBudget = 200'000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a search or closure runs out of budget.  `partial` is the
/// number of results (solutions, elements, ...) produced before stopping.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial)
      : Error(what + " (budget exceeded after " + std::to_string(partial) +
              " results)"),
        partial_(partial) {}

  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

/// A finite check contradicted a proven statement.  Never expected in a
/// correct build; it is raised instead of returning a wrong answer.
class Contradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace digcon
