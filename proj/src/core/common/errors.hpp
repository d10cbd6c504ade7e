#pragma once

#include <stdexcept>
#include <string>

namespace tauratio {

// Argument outside an operation's mathematical domain (n = 0, s <= 1/2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A result that does not fit the result type (tau_k with large k, ...).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A request that would exceed a configured memory or prime budget. Raised
// before any allocation takes place.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double best_bound = 0.0)
      : std::runtime_error(what), best_bound_(best_bound) {}

  // For tail-bound budgets: the smallest bound reachable within the budget.
  double best_bound() const noexcept { return best_bound_; }

 private:
  double best_bound_;
};

// Invalid configuration or usage (bad flag values, unsorted checkpoints).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tauratio
