#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "common/errors.hpp"
#include "constants/euler.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "empirical/naive.hpp"
#include "genfun/dirichlet.hpp"

using namespace tauratio;
using namespace tauratio::genfun;

namespace {

// Partial Dirichlet sum from the definitions: e_a by its divisor sum and tau
// by trial division.
double F_naive(std::uint64_t a, double s, std::uint64_t N) {
  long double sum = 0.0L;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double w = constants::e_a(a, n).to_double() / static_cast<double>(empirical::naive::tau(n));
    sum += w * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  }
  return static_cast<double>(sum);
}

const constants::EulerProductResult& K9() {
  static const auto K = constants::big_K(1e-9, constants::EulerOptions{4});
  return K;
}

const constants::EulerProductResult& C9() {
  static const auto C = constants::landau_C(1e-9, constants::EulerOptions{4});
  return C;
}

}  // namespace

TEST_SUITE("genfun") {

TEST_CASE("F_a truncated examples") {
  CHECK(F_a_truncated(1, 2.0, 1) == 1.0);
  CHECK(F_a_truncated(1, 2.0, 3) == doctest::Approx(1.0 + (1.0 / 3) / 8 + (4.0 / 7) / 18).epsilon(1e-15));
  CHECK(F_a_truncated(1, 2.0, 3) == doctest::Approx(1.0734127).epsilon(1e-7));
  CHECK(F_a_truncated(1, 2.0, 10) >= F_a_truncated(1, 2.0, 3));
  CHECK_THROWS_AS(F_a_truncated(1, 1.0, 10), DomainError);
  CHECK_THROWS_AS(F_a_truncated(0, 2.0, 10), DomainError);
}

TEST_CASE("F_a truncated matches the definition") {
  for (std::uint64_t a : {1, 2, 6, 12}) {
    for (double s : {1.5, 2.0, 3.0}) {
      INFO("a=" << a << " s=" << s);
      CHECK(F_a_truncated(a, s, 2000) == doctest::Approx(F_naive(a, s, 2000)).epsilon(1e-13));
    }
  }
}

TEST_CASE("F_a truncated is monotone in N") {
  double previous = 0.0;
  for (std::uint64_t N = 1; N <= 5000; N += 37) {
    const double v = F_a_truncated(6, 1.5, N);
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("local factor equals its s = 1 simplified form") {
  for (std::uint64_t p : {2, 3, 5, 7, 101, 10007}) {
    const auto x = static_cast<double>(p);
    const double l = -std::log1p(-1.0 / x);
    const double simplified = std::sqrt(1 - 1 / x) * x * (1 + (x - 1) * (x - 1) * l) / (x * x - x + 1);
    CHECK(phi_local(p, 1.0) == doctest::Approx(simplified).epsilon(1e-13));
  }
  // beta(2) = 1/3: (1/2)^{1/2} (2/3 - (1/3) 2 ln(1/2)).
  CHECK(phi_local(2, 1.0) == doctest::Approx(std::sqrt(0.5) * (2.0 / 3 + 2.0 * std::log(2.0) / 3)).epsilon(1e-15));
}

TEST_CASE("psi_1 is identically one") {
  for (double s : {0.6, 1.0, 2.0, 7.5}) CHECK(psi_a(1, s) == 1.0);
  CHECK(psi_a(2, 1.0) != 1.0);
}

TEST_CASE("phi_a domain") {
  CHECK_THROWS_AS(phi_a(1, 0.5, 100), DomainError);
  CHECK_THROWS_AS(phi_a(1, 2.0, 1), DomainError);
  CHECK_NOTHROW(phi_a(1, 0.51, 100));
}

TEST_CASE("Phi_1(1)/sqrt(pi) = K/C") {
  const auto phi = phi_a(1, 1.0, 1'000'000, 4);
  const double ratio = K9().value / C9().value;
  CHECK(ratio == doctest::Approx(0.38991).epsilon(1e-4));
  const double got = phi.value / std::sqrt(std::numbers::pi);
  CHECK(std::fabs(std::log(got / ratio)) <= phi.tail_bound + K9().tail_bound + C9().tail_bound);
  CHECK(phi_a_one_over_sqrt_pi(1, K9(), C9()) == doctest::Approx(ratio).epsilon(1e-15));
}

TEST_CASE("C beta(a) Phi_a(1)/sqrt(pi) = K(a) within combined tails") {
  for (std::uint64_t a : {1, 2, 3, 4, 6}) {
    const auto phi = phi_a(a, 1.0, 1'000'000, 4);
    const double lhs = C9().value * constants::beta(a).to_double() * phi.value / std::sqrt(std::numbers::pi);
    const double rhs = constants::K_of_a(a, K9());
    const double allowed = lhs * (std::expm1(C9().tail_bound) + std::expm1(phi.tail_bound)) +
                           rhs * std::expm1(K9().tail_bound) + 1e-14;
    INFO("a=" << a << " lhs=" << lhs << " rhs=" << rhs);
    CHECK(std::fabs(lhs - rhs) <= allowed);
  }
}

TEST_CASE("phi_a stabilises when the cutoff doubles") {
  for (std::uint64_t P : {10'000, 100'000}) {
    const auto v1 = phi_a(1, 1.0, P);
    const auto v2 = phi_a(1, 1.0, 2 * P);
    CHECK(std::fabs(std::log(v2.value / v1.value)) <= v1.tail_bound);
  }
}

TEST_CASE("Dirichlet identity residuals") {
  const auto r1 = identity_residual(1, 2.0, 1'000'000, 100'000, 4);
  CHECK(r1.residual <= 1e-5);
  CHECK(r1.residual <= r1.lhs_tail_bound + r1.rhs_tail_bound);
  CHECK(r1.residual == std::fabs(r1.lhs - r1.rhs));
  const auto r2 = identity_residual(2, 2.0, 1'000'000, 100'000, 4);
  CHECK(r2.residual <= 1e-5);
  CHECK(r2.residual <= r2.lhs_tail_bound + r2.rhs_tail_bound);
  const auto r4 = identity_residual(1, 4.0, 10'000, 10'000);
  CHECK(r4.residual <= 1e-10);
  CHECK(r4.residual <= r4.lhs_tail_bound + r4.rhs_tail_bound);
  CHECK_THROWS_AS(identity_residual(1, 1.0, 100, 100), DomainError);
}

TEST_CASE("identity residual shrinks as N and P grow") {
  const auto a = identity_residual(1, 2.0, 1'000, 1'000);
  const auto b = identity_residual(1, 2.0, 10'000, 10'000);
  const auto c = identity_residual(1, 2.0, 100'000, 100'000);
  CHECK(b.residual < a.residual);
  CHECK(c.residual < b.residual);
}

TEST_CASE("E prediction") {
  const double scale = phi_a_one_over_sqrt_pi(3, K9(), C9());
  CHECK(E_prediction(3, std::numbers::e, K9(), C9()) == doctest::Approx(scale * std::numbers::e).epsilon(1e-15));
  for (double x : {3.0, 1e3, 1e7}) {
    CHECK(E_prediction(3, x, K9(), C9()) * std::sqrt(std::log(x)) / x == doctest::Approx(scale).epsilon(1e-14));
  }
  CHECK_THROWS_AS(E_prediction(1, 1.0, K9(), C9()), DomainError);
}

}  // TEST_SUITE
