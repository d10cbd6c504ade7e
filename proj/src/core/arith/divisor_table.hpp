#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace tauratio::arith {

enum class TableKind { tau, tau_k, phi, mu };

struct SieveLimits {
  std::uint64_t memory_budget_bytes = UINT64_C(1) << 30;
};

// Dense values of tau, tau_k, phi or mu on [lo, hi], produced by the
// segmented factor sieve. Immutable after construction.
class DivisorTable {
 public:
  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  TableKind kind() const noexcept { return kind_; }
  std::uint32_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return hi_ - lo_ + 1; }

  // Value at n, lo <= n <= hi. Throws DomainError outside the window.
  std::int64_t at(std::uint64_t n) const;

  // Typed views; only the one matching kind() is non-empty.
  std::span<const std::uint32_t> counts() const noexcept;  // tau, tau_k
  std::span<const std::uint64_t> totients() const noexcept;
  std::span<const std::int8_t> moebius() const noexcept;

 private:
  friend DivisorTable sieve_window(std::uint64_t, std::uint64_t, TableKind, std::uint32_t,
                                   const SieveLimits&);
  using Storage =
      std::variant<std::vector<std::uint32_t>, std::vector<std::uint64_t>, std::vector<std::int8_t>>;

  std::uint64_t lo_ = 1;
  std::uint64_t hi_ = 1;
  TableKind kind_ = TableKind::tau;
  std::uint32_t k_ = 2;
  Storage values_;
};

// Bytes needed to sieve [lo, hi] for `kind` (values plus sieve scratch).
std::uint64_t sieve_window_bytes(std::uint64_t lo, std::uint64_t hi, TableKind kind);

// Throws BudgetError before allocating when the window does not fit the
// budget, OverflowError when a tau_k value does not fit 32 bits.
DivisorTable sieve_window(std::uint64_t lo, std::uint64_t hi, TableKind kind, std::uint32_t k = 2,
                          const SieveLimits& limits = {});

}  // namespace tauratio::arith
