#include "arith/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arith/primes.hpp"
#include "common/errors.hpp"
#include "common/int128.hpp"

namespace tauratio::arith {
namespace {

constexpr std::uint64_t kMaxInput = (UINT64_C(1) << 63) - 1;

// Pollard-Brent rho. n is odd, composite and has no prime factor < 2^16.
std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = find_factor(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].exponent == 0) throw DomainError("factorization: zero exponent");
    if (!is_prime(pairs[i].prime)) {
      throw DomainError("factorization: " + std::to_string(pairs[i].prime) + " is not prime");
    }
    if (i > 0 && pairs[i - 1].prime >= pairs[i].prime) {
      throw DomainError("factorization: primes must be strictly increasing");
    }
  }
  return Factorization(std::move(pairs));
}

std::uint32_t Factorization::exponent_of(std::uint64_t p) const noexcept {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p,
                             [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  return (it != pairs_.end() && it->prime == p) ? it->exponent : 0;
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, e] : pairs_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(n, p, &n)) throw OverflowError("factorization value overflows");
    }
  }
  return n;
}

std::uint64_t Factorization::radical() const {
  std::uint64_t r = 1;
  for (const auto& pp : pairs_) {
    if (__builtin_mul_overflow(r, pp.prime, &r)) throw OverflowError("radical overflows");
  }
  return r;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  if (n > kMaxInput) throw DomainError("factorize: n must be < 2^63");

  std::vector<PrimePower> pairs;
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    pairs.push_back({p, e});
  }
  if (n == 1) return Factorization(std::move(pairs));

  // The cofactor has no prime factor below 2^16, so below 2^32 it is prime.
  std::vector<std::uint64_t> large;
  if (n < (UINT64_C(1) << 32)) {
    large.push_back(n);
  } else {
    split(n, large);
    std::sort(large.begin(), large.end());
  }
  for (std::uint64_t p : large) {
    if (!pairs.empty() && pairs.back().prime == p) {
      ++pairs.back().exponent;
    } else {
      pairs.push_back({p, 1});
    }
  }
  return Factorization(std::move(pairs));
}

std::uint64_t tau_k_local(std::uint32_t e, std::uint32_t k) {
  if (k < 2) throw DomainError("tau_k: k must be >= 2");
  // C(e + k - 1, r) with r = min(e, k - 1); each prefix product is itself a
  // binomial coefficient, so the division is exact.
  const std::uint64_t n = static_cast<std::uint64_t>(e) + k - 1;
  const std::uint64_t r = std::min<std::uint64_t>(e, k - 1);
  u128 c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > UINT64_MAX) throw OverflowError("tau_k: local factor overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t tau(const Factorization& f, std::uint32_t k) {
  if (k < 2) throw DomainError("tau_k: k must be >= 2");
  std::uint64_t result = 1;
  for (const auto& pp : f.pairs()) {
    if (__builtin_mul_overflow(result, tau_k_local(pp.exponent, k), &result)) {
      throw OverflowError("tau_k overflows 64 bits");
    }
  }
  return result;
}

TotientMu totient_mu(const Factorization& f) {
  TotientMu out{1, 1};
  for (const auto& [p, e] : f.pairs()) {
    out.phi *= p - 1;
    for (std::uint32_t i = 1; i < e; ++i) out.phi *= p;
    out.mu = e >= 2 ? 0 : -out.mu;
  }
  return out;
}

}  // namespace tauratio::arith
