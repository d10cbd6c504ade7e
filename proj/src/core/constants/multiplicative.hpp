#pragma once

#include <cstdint>
#include <vector>

#include "arith/factorization.hpp"
#include "constants/rational.hpp"

namespace tauratio::constants {

// (p-1)^2 / (p^2-p+1).
Rational beta_prime(std::uint64_t p);
double beta_prime_double(std::uint64_t p) noexcept;

// beta(a) = prod over p | a of beta(p). Depends only on the radical of a.
Rational beta(std::uint64_t a);
Rational beta(const arith::Factorization& f);

// e_a(n) = (1/beta(a)) * sum over d | gcd(a, n) of beta(a n / d^2), evaluated
// literally from the definition (a n / d^2 is handled through exponents, so
// a n may exceed 64 bits).
Rational e_a(std::uint64_t a, std::uint64_t n);

// e_a(p^k) from the piecewise rule: beta(p) when p does not divide a,
// otherwise min(k+1, m+1) for k != m and m + 1/beta(p) for k == m, where
// m = v_p(a). Throws DomainError when p is not prime or k == 0.
Rational e_a_prime_power(std::uint64_t a, std::uint64_t p, std::uint32_t k);

// Local weights w(p, e) = e_a(p^e) / tau(p^e) for a fixed a, so that
// e_a(n) / tau(n) is the product of w over the prime powers of n.
class LocalWeights {
 public:
  explicit LocalWeights(std::uint64_t a);

  std::uint64_t a() const noexcept { return a_; }

  double operator()(std::uint64_t p, std::uint32_t e) const noexcept {
    for (const auto& local : divisors_) {
      if (local.prime == p) {
        const std::uint32_t capped = e < local.values.size() ? e : local.exponent + 1;
        return local.values[capped] / static_cast<double>(e + 1);
      }
    }
    return beta_prime_double(p) / static_cast<double>(e + 1);
  }

  // Exact weight, for small-scale oracles.
  Rational exact(std::uint64_t p, std::uint32_t e) const;

  // Largest w(p, e) over e >= 1 and p | a, or 1 if larger; bounds
  // e_a(n)/tau(n) from above for every n.
  double supremum() const noexcept;

 private:
  struct Local {
    std::uint64_t prime;
    std::uint32_t exponent;      // m = v_p(a)
    std::vector<double> values;  // e_a(p^e) for e = 0 .. m + 1
    std::vector<Rational> exact_values;
  };
  std::uint64_t a_;
  std::vector<Local> divisors_;
};

}  // namespace tauratio::constants
