#include "constants/kappa.hpp"

#include <array>
#include <cmath>

#include "arith/factorization.hpp"
#include "arith/primes.hpp"
#include "common/errors.hpp"
#include "constants/multiplicative.hpp"

namespace tauratio::constants {

double series_G(double y) {
  if (!(y >= 0.0 && y < 1.0)) throw DomainError("series_G: need 0 <= y < 1");
  double sum = 0.0;
  double power = y;
  for (int k = 1; k < 4000; ++k) {
    const double term = power / (k + 1);
    sum += term;
    if (term < std::ldexp(sum, -70)) break;
    power *= y;
  }
  return sum;
}

double log_ratio(std::uint64_t p) { return -std::log1p(-1.0 / static_cast<double>(p)); }

double local_numerator(std::uint64_t p, std::uint32_t m, double y) {
  if (m == 0) return 1.0 + beta_prime_double(p) * series_G(y);
  const std::uint64_t pm = [&] {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (__builtin_mul_overflow(v, p, &v)) throw OverflowError("local_numerator: p^m overflows");
    }
    return v;
  }();
  // Rational corrections for k <= m, converted once.
  double correction = 0.0;
  double power = 1.0;
  for (std::uint32_t k = 1; k <= m; ++k) {
    power *= y;
    const Rational c = (e_a_prime_power(pm, p, k) - Rational(m + 1)) / Rational(k + 1);
    correction += c.to_double() * power;
  }
  return 1.0 + static_cast<double>(m + 1) * series_G(y) + correction;
}

KappaBreakdown kappa(std::uint64_t a) {
  if (a == 0) throw DomainError("kappa: a must be >= 1");
  KappaBreakdown out;
  out.a = a;
  const auto fa = arith::factorize(a);
  out.beta_a = beta(fa);
  double product = out.beta_a.to_double();
  for (const auto& [p, m] : fa.pairs()) {
    const double y = 1.0 / static_cast<double>(p);
    const double num = local_numerator(p, m, y);
    const double den = 1.0 + beta_prime_double(p) * series_G(y);
    out.per_prime.push_back({p, m, num, den});
    product *= num / den;
  }
  out.kappa = product;
  return out;
}

double kappa_closed(std::uint64_t p, unsigned m) {
  if (m < 1 || m > 4) throw DomainError("kappa_closed: closed forms exist for m = 1..4 only");
  if (!arith::is_prime(p)) throw DomainError("kappa_closed: p must be prime");
  const double x = static_cast<double>(p);
  const double b = beta_prime_double(p);
  const double pl = x * log_ratio(p);
  double num = 0.0;
  switch (m) {
    case 1:
      num = 2 * pl - 1 - 1 / (2 * x) + 1 / (2 * x * b);
      break;
    case 2:
      num = 3 * pl - 2 - 1 / (2 * x) - 1 / (3 * x * x) + 1 / (3 * x * x * b);
      break;
    case 3:
      num = 4 * pl - 3 - 1 / x - 1 / (3 * x * x) - 1 / (4 * x * x * x) + 1 / (4 * x * x * x * b);
      break;
    case 4: {
      const double x4 = x * x * x * x;
      num = 5 * pl - 4 - 3 / (2 * x) - 2 / (3 * x * x) - 1 / (4 * x * x * x) - 1 / (5 * x4) +
            1 / (5 * x4 * b);
      break;
    }
  }
  return num / (pl - 1 + 1 / b);
}

std::span<const PublishedKappa> published_kappa_table() {
  static constexpr std::array<PublishedKappa, 12> kTable = {{
#include "constants/published_kappa.inc"
  }};
  return kTable;
}

}  // namespace tauratio::constants
