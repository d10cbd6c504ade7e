#include "empirical/naive.hpp"

#include <numeric>

#include "common/errors.hpp"
#include "constants/multiplicative.hpp"

namespace tauratio::empirical::naive {

std::uint64_t tau(std::uint64_t n) {
  if (n == 0) throw DomainError("tau: n must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

std::uint64_t tau3(std::uint64_t n) {
  if (n == 0) throw DomainError("tau3: n must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (n % x != 0) continue;
    const std::uint64_t rest = n / x;
    for (std::uint64_t y = 1; y <= rest; ++y) {
      if (rest % y == 0) ++count;
    }
  }
  return count;
}

std::uint64_t tau_k(std::uint64_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw DomainError("tau_k: n and k must be >= 1");
  if (k == 1) return 1;
  if (k == 2) return tau(n);
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) count += tau_k(n / d, k - 1);
  }
  return count;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw DomainError("totient: n must be >= 1");
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

constants::Rational sum_S_a(std::uint64_t a, std::uint32_t k, std::uint64_t x) {
  constants::Rational sum;
  for (std::uint64_t n = 1; n <= x; ++n) {
    sum += constants::Rational(static_cast<std::int64_t>(tau(n)), static_cast<std::int64_t>(tau_k(n + a, k)));
  }
  return sum;
}

constants::Rational sum_E_a(std::uint64_t a, std::uint64_t x) {
  constants::Rational sum;
  for (std::uint64_t n = 1; n <= x; ++n) {
    sum += constants::e_a(a, n) / constants::Rational(static_cast<std::int64_t>(tau(n)));
  }
  return sum;
}

constants::Rational sum_inv_phi(std::uint64_t m, std::uint64_t x) {
  constants::Rational sum;
  for (std::uint64_t q = 1; q <= x; ++q) {
    if (std::gcd(q, m) == 1) sum += constants::Rational(1, static_cast<std::int64_t>(totient(q)));
  }
  return sum;
}

}  // namespace tauratio::empirical::naive
