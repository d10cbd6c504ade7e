#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include "arith/primes.hpp"
#include "common/errors.hpp"

namespace tauratio::arith {

// Largest hi accepted by the window sieve; keeps the base prime table small.
inline constexpr std::uint64_t kWindowSieveMax = UINT64_C(1'000'000'000'000);

namespace detail {

// Exact division by an odd constant via its inverse modulo 2^w
// (Granlund-Montgomery): n is divisible by d iff n * inv <= max / d, and then
// n / d == n * inv.
template <class UInt>
struct OddDivisor {
  UInt inverse;
  UInt limit;

  explicit OddDivisor(UInt d) : inverse(d), limit(std::numeric_limits<UInt>::max() / d) {
    for (int i = 0; i < 6; ++i) inverse = static_cast<UInt>(inverse * static_cast<UInt>(2 - d * inverse));
  }

  bool divides(UInt n, UInt& quotient) const {
    quotient = static_cast<UInt>(n * inverse);
    return quotient <= limit;
  }
};

template <class UInt, class Visit>
void factor_window_impl(std::uint64_t lo, std::uint64_t hi, Visit& visit) {
  const std::size_t count = hi - lo + 1;
  std::vector<UInt> rem(count);
  for (std::size_t i = 0; i < count; ++i) rem[i] = static_cast<UInt>(lo + i);

  // p = 2
  {
    std::uint64_t first = (lo + 1) & ~std::uint64_t{1};
    for (std::uint64_t n = first; n <= hi; n += 2) {
      const std::size_t j = n - lo;
      const int e = std::countr_zero(rem[j]);
      rem[j] >>= e;
      visit(j, std::uint64_t{2}, static_cast<std::uint32_t>(e));
    }
  }

  const std::uint64_t root = isqrt(hi);
  const auto base = primes_up_to(static_cast<std::uint32_t>(root));
  for (std::size_t b = 1; b < base.size(); ++b) {
    const std::uint64_t p = base[b];
    const OddDivisor<UInt> div(static_cast<UInt>(p));
    const std::uint64_t first = (lo + p - 1) / p * p;
    for (std::uint64_t n = first; n <= hi; n += p) {
      const std::size_t j = n - lo;
      UInt r = static_cast<UInt>(rem[j] * div.inverse);  // exact: p | n
      std::uint32_t e = 1;
      UInt q;
      while (div.divides(r, q)) {
        r = q;
        ++e;
      }
      rem[j] = r;
      visit(j, p, e);
    }
  }

  for (std::size_t j = 0; j < count; ++j) {
    if (rem[j] > 1) visit(j, static_cast<std::uint64_t>(rem[j]), std::uint32_t{1});
  }
}

}  // namespace detail

// Calls visit(index, p, e) for every prime power p^e exactly dividing
// n = lo + index, for all n in [lo, hi]. For a fixed index the primes arrive
// in increasing order. n = 1 receives no calls.
template <class Visit>
void factor_window(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (lo == 0 || hi < lo) throw DomainError("factor_window: need 1 <= lo <= hi");
  if (hi > kWindowSieveMax) throw DomainError("factor_window: hi exceeds 10^12");
  if (hi <= std::numeric_limits<std::uint32_t>::max()) {
    detail::factor_window_impl<std::uint32_t>(lo, hi, visit);
  } else {
    detail::factor_window_impl<std::uint64_t>(lo, hi, visit);
  }
}

}  // namespace tauratio::arith
