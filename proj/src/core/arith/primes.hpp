#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tauratio::arith {

// All primes p <= limit, ascending (plain sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Primes below 2^16, computed once.
std::span<const std::uint32_t> small_primes();

// Deterministic Miller-Rabin for 64-bit inputs. Uses the fixed seven-base
// set that has been verified to have no strong pseudoprimes below 2^64.
bool is_prime(std::uint64_t n) noexcept;

std::uint64_t isqrt(std::uint64_t n) noexcept;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Segmented enumeration of the primes in [lo, hi], in ascending order.
// `base` must contain every prime <= sqrt(hi).
class PrimeSegment {
 public:
  PrimeSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base);

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (lo_ <= 2 && hi_ >= 2) fn(std::uint64_t{2});
    for (std::size_t i = 0; i < odd_.size(); ++i) {
      if (odd_[i]) fn(first_odd_ + 2 * i);
    }
  }

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
  std::uint64_t first_odd_ = 0;
  std::vector<std::uint8_t> odd_;  // odd_[i] != 0 iff first_odd_ + 2i is prime
};

}  // namespace tauratio::arith
