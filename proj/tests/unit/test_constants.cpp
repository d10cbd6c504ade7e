#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "arith/factorization.hpp"
#include "arith/primes.hpp"
#include "common/errors.hpp"
#include "constants/euler.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "constants/rational.hpp"

using namespace tauratio;
using namespace tauratio::constants;

namespace {

// Reference values computed independently with mpmath (30 digits).
constexpr double kKPartialTo3 = 0.723000706832453;    // factors at 2 and 3 over sqrt(pi)
constexpr double kKPartialTo1e7 = 0.75782770866457;   // every prime <= 10^7
constexpr double kZeta3 = 1.2020569031595943;
constexpr double kCExact = 1.9435964368207592;       // zeta(2) zeta(3) / zeta(6)

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// kappa(a) from the defining series, with e_a(p^k) taken from the literal
// divisor-sum definition and summed in long double.
double kappa_by_series(std::uint64_t a) {
  long double result = beta(a).to_double();
  const auto fa = arith::factorize(a);
  for (const auto& pp : fa.pairs()) {
    const auto p = static_cast<long double>(pp.prime);
    const long double b = beta_prime(pp.prime).to_double();
    long double num = 1.0L, den = 1.0L, y = 1.0L;
    for (unsigned k = 1; k <= 80; ++k) {
      y /= p;
      // Past k = m + 1 the definition sum is constant; 2^k stays well inside 64 bits.
      const long double e = k <= pp.exponent + 6 ? e_a(a, ipow(pp.prime, k)).to_double() : pp.exponent + 1;
      num += e * y / (k + 1);
      den += b * y / (k + 1);
    }
    result *= num / den;
  }
  return static_cast<double>(result);
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("Rational stays reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "2");
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
  CHECK((Rational(1, 3) - Rational(1, 3)).sign() == 0);
  CHECK((-Rational(2, 5)).sign() == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("Rational converts to the nearest double") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
  CHECK(Rational::from_u64(UINT64_MAX).to_double() == 18446744073709551616.0);
  const Rational big = Rational::from_u64(UINT64_MAX) * Rational::from_u64(UINT64_MAX) /
                       Rational::from_u64(UINT64_MAX - 2) / Rational::from_u64(UINT64_MAX);
  CHECK(big.to_double() == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("beta examples") {
  CHECK(beta(1) == Rational(1));
  CHECK(beta(2) == Rational(1, 3));
  CHECK(beta(3) == Rational(4, 7));
  CHECK(beta(12) == Rational(4, 21));
  CHECK(beta(12) == beta(6));
}

TEST_CASE("beta lies in (0, 1] and depends only on the radical") {
  for (std::uint64_t a = 1; a <= 3000; ++a) {
    const Rational b = beta(a);
    REQUIRE(b.sign() > 0);
    REQUIRE(b <= Rational(1));
    REQUIRE(b == beta(arith::factorize(a).radical()));
  }
}

TEST_CASE("e_a examples") {
  CHECK(e_a(2, 3) == Rational(4, 7));
  CHECK(e_a(2, 2) == Rational(4));
  CHECK(e_a(4, 4) == Rational(5));
  CHECK(e_a(1, 1) == Rational(1));
  CHECK(e_a_prime_power(2, 2, 1) == Rational(4));
  CHECK(e_a_prime_power(2, 2, 3) == Rational(2));
  CHECK(e_a_prime_power(4, 2, 1) == Rational(2));
  CHECK_THROWS_AS(e_a_prime_power(2, 4, 1), DomainError);
  CHECK_THROWS_AS(e_a_prime_power(2, 2, 0), DomainError);
}

TEST_CASE("e_a equals beta(n) for n coprime to a") {
  for (std::uint64_t a : {1, 2, 6, 35, 210}) {
    for (std::uint64_t n = 1; n <= 500; ++n) {
      if (std::gcd(a, n) == 1) REQUIRE(e_a(a, n) == beta(n));
    }
  }
}

TEST_CASE("e_a_prime_power agrees with the definition sum") {
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (std::uint64_t p : primes) {
    const std::uint64_t other = p == 2 ? 15 : 2;
    for (unsigned v = 0; v <= 4; ++v) {
      for (std::uint64_t a : {ipow(p, v), ipow(p, v) * other}) {
        for (unsigned k = 1; k <= 6; ++k) {
          INFO("a=" << a << " p=" << p << " k=" << k);
          CHECK(e_a_prime_power(a, p, k) == e_a(a, ipow(p, k)));
        }
      }
    }
  }
}

TEST_CASE("e_a is multiplicative on random coprime pairs") {
  std::mt19937_64 rng(1234);
  for (std::uint64_t a : {1, 2, 6, 12}) {
    for (int i = 0; i < 200;) {
      // Bias towards small primes so that gcd(a, n) > 1 occurs often.
      const std::uint64_t m = (1 + rng() % 300) << (rng() % 4);
      const std::uint64_t n = (1 + rng() % 300) * ipow(3, rng() % 3);
      if (std::gcd(m, n) != 1) continue;
      ++i;
      INFO("a=" << a << " m=" << m << " n=" << n);
      CHECK(e_a(a, m * n) == e_a(a, m) * e_a(a, n));
    }
  }
}

TEST_CASE("local weights are e_a(p^e) / (e + 1)") {
  for (std::uint64_t a : {1, 2, 12, 360}) {
    const LocalWeights w(a);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      for (unsigned e = 1; e <= 6; ++e) {
        const Rational want = e_a(a, ipow(p, e)) / Rational(e + 1);
        CHECK(w.exact(p, e) == want);
        CHECK(w(p, e) == doctest::Approx(want.to_double()).epsilon(1e-15));
        CHECK(w(p, e) <= w.supremum());
      }
    }
  }
}

TEST_CASE("kappa examples") {
  CHECK(kappa(1).kappa == 1.0);
  CHECK(kappa(1).per_prime.empty());
  CHECK(std::fabs(kappa(2).kappa - 0.671113754) <= 5e-9);
  CHECK(kappa(6).kappa == doctest::Approx(0.5316605).epsilon(1e-7));
}

TEST_CASE("kappa breakdown reassembles to kappa") {
  for (std::uint64_t a : {2, 12, 360, 30030, 1024}) {
    const auto k = kappa(a);
    const auto fa = arith::factorize(a);
    REQUIRE(k.per_prime.size() == fa.size());
    double product = k.beta_a.to_double();
    for (std::size_t i = 0; i < k.per_prime.size(); ++i) {
      CHECK(k.per_prime[i].prime == fa.pairs()[i].prime);
      CHECK(k.per_prime[i].exponent == fa.pairs()[i].exponent);
      product *= k.per_prime[i].numerator / k.per_prime[i].denominator;
    }
    CHECK(k.kappa == doctest::Approx(product).epsilon(1e-15));
    CHECK(k.beta_a == beta(a));
  }
}

TEST_CASE("kappa agrees with its defining series") {
  for (std::uint64_t a : {2, 3, 4, 8, 9, 12, 16, 30, 97, 360}) {
    INFO("a=" << a);
    CHECK(std::fabs(kappa(a).kappa - kappa_by_series(a)) <= 1e-14);
  }
}

TEST_CASE("kappa is multiplicative on random coprime pairs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50;) {
    const std::uint64_t m = 1 + rng() % 10'000, n = 1 + rng() % 10'000;
    if (std::gcd(m, n) != 1) continue;
    ++i;
    CHECK(std::fabs(kappa(m * n).kappa - kappa(m).kappa * kappa(n).kappa) <= 1e-12);
  }
}

TEST_CASE("closed forms match the series") {
  for (std::uint64_t p : {2, 3, 5, 7, 101}) {
    for (unsigned m = 1; m <= 4; ++m) {
      INFO("p=" << p << " m=" << m);
      CHECK(std::fabs(kappa_closed(p, m) - kappa(ipow(p, m)).kappa) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(kappa_closed(2, 0), DomainError);
  CHECK_THROWS_AS(kappa_closed(2, 5), DomainError);
  CHECK_THROWS_AS(kappa_closed(6, 1), DomainError);
}

TEST_CASE("printed kappa table is reproduced") {
  const auto table = published_kappa_table();
  REQUIRE(table.size() == 12);
  for (const auto& entry : table) {
    INFO("a=" << entry.a);
    CHECK(entry.a == ipow(entry.prime, entry.exponent));
    CHECK(std::fabs(kappa(entry.a).kappa - std::stod(entry.printed)) <= entry.tolerance);
  }
}

TEST_CASE("K local factor: series form, positivity and the constant 0.5 from p = 11 on") {
  for (std::uint64_t p = 128; p <= 2000; ++p) {
    if (!arith::is_prime(p)) continue;
    CHECK(std::fabs(big_K_log_factor(p) - std::log(big_K_factor(p))) <= 2e-15);
  }
  const auto excess = [](std::uint64_t p) { return std::expm1(big_K_log_factor(p)) * double(p) * double(p); };
  CHECK(excess(2) == doctest::Approx(0.788943411683284).epsilon(1e-12));
  CHECK(excess(11) == doctest::Approx(0.495273219282063).epsilon(1e-10));
  double previous = excess(11);
  for (std::uint64_t p : {13, 101, 1009, 10007, 100003, 1000003}) {
    const double e = excess(p);
    CHECK(e < previous);
    CHECK(e > 11.0 / 24.0);
    previous = e;
  }
}

TEST_CASE("big_K partial products") {
  const auto two_primes = big_K_at_cutoff(3);
  CHECK(two_primes.factor_count == 2);
  CHECK(two_primes.value == doctest::Approx(kKPartialTo3).epsilon(1e-13));
  CHECK(std::fabs(two_primes.value - 0.7230) <= 1e-4);
  const auto big = big_K_at_cutoff(10'000'000, EulerOptions{4});
  CHECK(big.factor_count == 664579);
  CHECK(std::fabs(big.value - kKPartialTo1e7) <= 5e-13);
}

TEST_CASE("big_K converges and brackets the true value") {
  const auto K = big_K(1e-9, EulerOptions{4});
  CHECK(K.tail_bound <= 1e-9);
  CHECK(K.value >= kKPartialTo1e7);
  // Every omitted factor exceeds 1, so the true value sits in [value, value e^tail].
  CHECK(std::fabs(K.value - 0.7578277100) <= 2e-10);
  const auto K1000 = big_K_at_cutoff(1000);
  CHECK(std::fabs(K1000.value - K.value) <= 1e-4);
}

TEST_CASE("big_K stability under doubling the cutoff") {
  for (std::uint64_t cutoff : {10'000, 100'000, 1'000'000}) {
    const auto a = big_K_at_cutoff(cutoff);
    const auto b = big_K_at_cutoff(2 * cutoff);
    CHECK(b.value >= a.value);
    CHECK(std::log(b.value / a.value) <= a.tail_bound);
    CHECK(b.tail_bound < a.tail_bound);
  }
}

TEST_CASE("big_K is thread-count invariant") {
  CHECK(big_K_at_cutoff(5'000'000, EulerOptions{1}).value == big_K_at_cutoff(5'000'000, EulerOptions{7}).value);
}

TEST_CASE("Euler product domain and budget errors") {
  CHECK_THROWS_AS(big_K(1e-13), DomainError);
  CHECK_THROWS_AS(big_K(0.5), DomainError);
  CHECK_THROWS_AS(big_K_at_cutoff(1), DomainError);
  try {
    big_K(1e-12);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.best_bound() > 1e-12);
    CHECK(e.best_bound() < 1e-11);
  }
  CHECK_THROWS_AS(big_K(1e-6, EulerOptions{1, 1000}), BudgetError);
}

TEST_CASE("zeta values") {
  const auto z2 = zeta_direct(2.0);
  CHECK(std::fabs(z2.value - std::numbers::pi * std::numbers::pi / 6.0) <= z2.bound + 1e-15);
  const auto z3 = zeta_direct(3.0);
  CHECK(z3.bound <= 5e-13);
  CHECK(std::fabs(z3.value - kZeta3) <= z3.bound);
  CHECK_THROWS_AS(zeta_direct(1.0), DomainError);
  const auto cz = landau_C_from_zeta();
  CHECK(std::fabs(cz.value - kCExact) <= cz.bound);
}

TEST_CASE("C by direct product and by zeta values") {
  const auto c = C_and_prime_sums(1e-9, EulerOptions{4});
  CHECK(c.C.value == doctest::Approx(1.9435964).epsilon(1e-7));
  CHECK(c.C.value <= kCExact);
  CHECK(std::log(kCExact / c.C.value) <= c.C.tail_bound);
  CHECK(c.L.tail_bound <= 1e-9);
  // L from the converged run lies between a plain partial sum and that sum plus its tail.
  const auto L6 = prime_log_sum_at_cutoff(1'000'000);
  CHECK(c.L.value >= L6.value);
  CHECK(c.L.value - L6.value <= L6.tail_bound + c.L.tail_bound);
}

TEST_CASE("L partial sum and the per-prime identity") {
  const double want = std::log(2.0) / 3 + std::log(3.0) / 7 + std::log(5.0) / 21;
  const auto L5 = prime_log_sum_at_cutoff(5);
  CHECK(L5.value == doctest::Approx(want).epsilon(1e-15));
  CHECK(L5.value == doctest::Approx(0.46463).epsilon(1e-5));
  for (double p : {2.0, 3.0, 5.0, 7.0, 1009.0}) {
    const double lhs = std::log(p) / (p * p - p + 1) + std::log(p) / (p - 1);
    const double rhs = p * p * std::log(p) / ((p - 1) * (p * p - p + 1));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
  }
  CHECK(lemma10_correction(2) == doctest::Approx(4 * std::log(2.0) / 3).epsilon(1e-15));
  CHECK(lemma10_correction(2) == doctest::Approx(0.924196).epsilon(1e-6));
  CHECK(lemma10_correction(1) == 0.0);
  CHECK(lemma10_correction(12) == doctest::Approx(lemma10_correction(2) + lemma10_correction(3)));
}

TEST_CASE("totient main term shifts by C per unit of ln x") {
  const auto C = landau_C(1e-6);
  const auto L = prime_log_sum(1e-6);
  for (double x : {3.0, 100.0, 1e6}) {
    CHECK(lemma10_prediction(1, std::numbers::e * x, C, L) - lemma10_prediction(1, x, C, L) ==
          doctest::Approx(C.value).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lemma10_prediction(1, 2.5, C, L), DomainError);
}

TEST_CASE("K(a) = K kappa(a)") {
  const auto K = big_K(1e-9, EulerOptions{4});
  CHECK(K_of_a(1, K) == K.value);
  CHECK(std::fabs(K_of_a(2, K) - 0.5085886) <= 5e-8);
  // 0.757827651 * 0.612926558 = 0.46449269; the often quoted 0.4644930 is misrounded.
  CHECK(std::fabs(K_of_a(4, K) - 0.4644927) <= 5e-8);
}

}  // TEST_SUITE
