#include "constants/multiplicative.hpp"

#include <algorithm>
#include <numeric>

#include "arith/primes.hpp"
#include "common/errors.hpp"

namespace tauratio::constants {

Rational beta_prime(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  // p < 2^31 keeps every intermediate inside 64 bits.
  if (p < (UINT64_C(1) << 31)) return Rational((q - 1) * (q - 1), q * q - q + 1);
  return Rational(q - 1) * Rational(q - 1) / (Rational(q) * Rational(q) - Rational(q) + Rational(1));
}

double beta_prime_double(std::uint64_t p) noexcept {
  const auto x = static_cast<double>(p);
  return (x - 1.0) * (x - 1.0) / (x * x - x + 1.0);
}

Rational beta(const arith::Factorization& f) {
  Rational b(1);
  for (const auto& pp : f.pairs()) b *= beta_prime(pp.prime);
  return b;
}

Rational beta(std::uint64_t a) { return beta(arith::factorize(a)); }

Rational e_a(std::uint64_t a, std::uint64_t n) {
  const auto fa = arith::factorize(a);
  const auto fn = arith::factorize(n);

  // Primes of a*n with their exponents in a and n.
  struct Entry {
    std::uint64_t p;
    std::uint32_t va;
    std::uint32_t vn;
  };
  std::vector<Entry> entries;
  for (const auto& pp : fa.pairs()) entries.push_back({pp.prime, pp.exponent, fn.exponent_of(pp.prime)});
  for (const auto& pp : fn.pairs()) {
    if (fa.exponent_of(pp.prime) == 0) entries.push_back({pp.prime, 0, pp.exponent});
  }

  // Walk the divisors d of gcd(a, n) via exponent vectors.
  std::vector<std::uint32_t> vd(entries.size(), 0);
  Rational sum(0);
  for (;;) {
    Rational term(1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].va + entries[i].vn > 2 * vd[i]) term *= beta_prime(entries[i].p);
    }
    sum += term;

    std::size_t i = 0;
    for (; i < entries.size(); ++i) {
      if (vd[i] < std::min(entries[i].va, entries[i].vn)) {
        ++vd[i];
        break;
      }
      vd[i] = 0;
    }
    if (i == entries.size()) break;
  }
  return sum / beta(fa);
}

Rational e_a_prime_power(std::uint64_t a, std::uint64_t p, std::uint32_t k) {
  if (!arith::is_prime(p)) throw DomainError("e_a_prime_power: p must be prime");
  if (k == 0) throw DomainError("e_a_prime_power: k must be >= 1");
  if (a == 0) throw DomainError("e_a_prime_power: a must be >= 1");
  std::uint32_t m = 0;
  for (std::uint64_t r = a; r % p == 0; r /= p) ++m;
  if (m == 0) return beta_prime(p);
  if (k != m) return Rational(std::min(k, m) + 1);
  return Rational(m) + Rational(1) / beta_prime(p);
}

LocalWeights::LocalWeights(std::uint64_t a) : a_(a) {
  const auto fa = arith::factorize(a);
  for (const auto& pp : fa.pairs()) {
    Local local{pp.prime, pp.exponent, {}, {}};
    local.exact_values.push_back(Rational(1));
    for (std::uint32_t e = 1; e <= pp.exponent + 1; ++e) {
      local.exact_values.push_back(e_a_prime_power(a, pp.prime, e));
    }
    for (const auto& v : local.exact_values) local.values.push_back(v.to_double());
    divisors_.push_back(std::move(local));
  }
}

Rational LocalWeights::exact(std::uint64_t p, std::uint32_t e) const {
  for (const auto& local : divisors_) {
    if (local.prime == p) {
      const std::uint32_t capped = e < local.exact_values.size() ? e : local.exponent + 1;
      return local.exact_values[capped] / Rational(e + 1);
    }
  }
  return beta_prime(p) / Rational(e + 1);
}

double LocalWeights::supremum() const noexcept {
  double sup = 1.0;
  for (const auto& local : divisors_) {
    double best = 1.0;
    // Beyond e = m + 1 the weight (m+1)/(e+1) only decreases.
    for (std::uint32_t e = 1; e < local.values.size(); ++e) {
      best = std::max(best, local.values[e] / static_cast<double>(e + 1));
    }
    sup *= best;
  }
  return sup;
}

}  // namespace tauratio::constants
