#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tauratio::arith {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition of a positive integer. The empty decomposition
// is n = 1. Primes are strictly increasing and every exponent is >= 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates ordering, primality and exponents; throws DomainError.
  static Factorization from_pairs(std::vector<PrimePower> pairs);

  std::span<const PrimePower> pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }

  // v_p(n); zero when p does not divide n.
  std::uint32_t exponent_of(std::uint64_t p) const noexcept;

  // Product of the prime powers. Throws OverflowError past 2^64 - 1.
  std::uint64_t value() const;

  // Product of the distinct primes.
  std::uint64_t radical() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  explicit Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {}
  friend Factorization factorize(std::uint64_t n);

  std::vector<PrimePower> pairs_;
};

// Throws DomainError for n = 0 or n >= 2^63.
Factorization factorize(std::uint64_t n);

// Number of ordered k-tuples with product n: prod over p^e of C(e+k-1, k-1).
// k = 2 is the ordinary divisor count. Throws OverflowError instead of
// wrapping.
std::uint64_t tau(const Factorization& f, std::uint32_t k = 2);

// C(e+k-1, k-1), the local factor of tau_k at p^e.
std::uint64_t tau_k_local(std::uint32_t e, std::uint32_t k);

struct TotientMu {
  std::uint64_t phi;
  int mu;
};

TotientMu totient_mu(const Factorization& f);

}  // namespace tauratio::arith
