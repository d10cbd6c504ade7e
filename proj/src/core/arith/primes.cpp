#include "arith/primes.hpp"

#include <array>
#include <cmath>

#include "common/int128.hpp"

namespace tauratio::arith {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> table = primes_up_to(65535);
  return table;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > UINT64_C(0xFFFFFFFF) || r * r > n)) --r;
  while (r < UINT64_C(0xFFFFFFFF) && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;

  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  static constexpr std::array<std::uint64_t, 7> kBases = {2,      325,     9375,      28178,
                                                          450775, 9780504, 1795265022};
  for (std::uint64_t a : kBases) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeSegment::PrimeSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base)
    : lo_(lo), hi_(hi) {
  if (hi < 3 || hi < lo) return;
  first_odd_ = std::max<std::uint64_t>(lo, 3) | 1;
  if (first_odd_ > hi) return;
  const std::size_t count = (hi - first_odd_) / 2 + 1;
  odd_.assign(count, 1);
  for (std::uint64_t p : base) {
    if (p == 2) continue;
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (first_odd_ + p - 1) / p * p);
    if ((start & 1) == 0) start += p;
    for (std::uint64_t j = (start - first_odd_) / 2; j < count; j += p) odd_[j] = 0;
  }
  if (first_odd_ == 1) odd_[0] = 0;
}

}  // namespace tauratio::arith
