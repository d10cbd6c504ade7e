#include "arith/divisor_table.hpp"

#include <limits>
#include <string>

#include "arith/factorization.hpp"
#include "arith/window_sieve.hpp"
#include "common/errors.hpp"

namespace tauratio::arith {

std::int64_t DivisorTable::at(std::uint64_t n) const {
  if (n < lo_ || n > hi_) throw DomainError("DivisorTable: n outside window");
  const std::size_t i = n - lo_;
  return std::visit([i](const auto& v) { return static_cast<std::int64_t>(v[i]); }, values_);
}

std::span<const std::uint32_t> DivisorTable::counts() const noexcept {
  if (auto* v = std::get_if<std::vector<std::uint32_t>>(&values_)) return *v;
  return {};
}

std::span<const std::uint64_t> DivisorTable::totients() const noexcept {
  if (auto* v = std::get_if<std::vector<std::uint64_t>>(&values_)) return *v;
  return {};
}

std::span<const std::int8_t> DivisorTable::moebius() const noexcept {
  if (auto* v = std::get_if<std::vector<std::int8_t>>(&values_)) return *v;
  return {};
}

std::uint64_t sieve_window_bytes(std::uint64_t lo, std::uint64_t hi, TableKind kind) {
  const std::uint64_t count = hi - lo + 1;
  const std::uint64_t value_bytes = kind == TableKind::phi ? 8 : kind == TableKind::mu ? 1 : 4;
  const std::uint64_t scratch = hi <= std::numeric_limits<std::uint32_t>::max() ? 4 : 8;
  return count * (value_bytes + scratch);
}

DivisorTable sieve_window(std::uint64_t lo, std::uint64_t hi, TableKind kind, std::uint32_t k,
                          const SieveLimits& limits) {
  if (lo == 0 || hi < lo) throw DomainError("sieve_window: need 1 <= lo <= hi");
  if (kind == TableKind::tau) k = 2;
  if (k < 2) throw DomainError("sieve_window: k must be >= 2");
  const std::uint64_t count = hi - lo + 1;
  if (count > limits.memory_budget_bytes ||
      sieve_window_bytes(lo, hi, kind) > limits.memory_budget_bytes) {
    throw BudgetError("sieve_window: window of " + std::to_string(count) +
                      " elements exceeds the memory budget of " +
                      std::to_string(limits.memory_budget_bytes) + " bytes");
  }

  DivisorTable table;
  table.lo_ = lo;
  table.hi_ = hi;
  table.kind_ = kind;
  table.k_ = k;

  switch (kind) {
    case TableKind::tau:
    case TableKind::tau_k: {
      std::vector<std::uint64_t> local_factor(64);
      for (std::uint32_t e = 1; e < 64; ++e) {
        try {
          local_factor[e] = tau_k_local(e, k);
        } catch (const OverflowError&) {
          local_factor[e] = 0;  // only an error if it actually occurs
        }
      }
      std::vector<std::uint32_t> values(count, 1);
      factor_window(lo, hi, [&](std::size_t j, std::uint64_t, std::uint32_t e) {
        const std::uint64_t f = local_factor[e];
        const std::uint64_t v = static_cast<std::uint64_t>(values[j]) * f;
        if (f == 0 || f > UINT32_MAX || v > UINT32_MAX) {
          throw OverflowError("sieve_window: tau_k value exceeds 32 bits");
        }
        values[j] = static_cast<std::uint32_t>(v);
      });
      table.values_ = std::move(values);
      break;
    }
    case TableKind::phi: {
      std::vector<std::uint64_t> values(count, 1);
      factor_window(lo, hi, [&](std::size_t j, std::uint64_t p, std::uint32_t e) {
        std::uint64_t f = p - 1;
        for (std::uint32_t i = 1; i < e; ++i) f *= p;
        values[j] *= f;
      });
      table.values_ = std::move(values);
      break;
    }
    case TableKind::mu: {
      std::vector<std::int8_t> values(count, 1);
      factor_window(lo, hi, [&](std::size_t j, std::uint64_t, std::uint32_t e) {
        values[j] = e >= 2 ? std::int8_t{0} : static_cast<std::int8_t>(-values[j]);
      });
      table.values_ = std::move(values);
      break;
    }
  }
  return table;
}

}  // namespace tauratio::arith
