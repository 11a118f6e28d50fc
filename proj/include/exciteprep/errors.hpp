#pragma once

#include <stdexcept>
#include <string>

namespace exciteprep {

/// Raised when a runtime numerical invariant fails (unitarity, completeness, ...).
/// Carries the invariant name so the CLI can report which check broke (exit 1).
class NumericalAssertion : public std::runtime_error {
 public:
  NumericalAssertion(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Raised on scenario schema violations (exit 2). `where` is a JSON pointer
/// or line position identifying the offending field.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string where, const std::string& detail)
      : std::runtime_error(where + ": " + detail), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace exciteprep
