#include "genfun/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "arith/factorization.hpp"
#include "arith/primes.hpp"
#include "arith/window_sieve.hpp"
#include "common/errors.hpp"
#include "common/parallel.hpp"
#include "common/summation.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"

namespace tauratio::genfun {
namespace {

constexpr std::uint64_t kWindow = UINT64_C(1) << 20;
constexpr std::uint64_t kPrimeChunk = UINT64_C(1) << 22;

void check_s(double s) {
  if (!(s > 0.5) || !std::isfinite(s)) throw DomainError("s must be a finite real > 1/2");
}

double log_phi_local(std::uint64_t p, double s) {
  const double y = std::pow(static_cast<double>(p), -s);
  return 0.5 * std::log1p(-y) + std::log1p(constants::beta_prime_double(p) * constants::series_G(y));
}

}  // namespace

double F_a_truncated(std::uint64_t a, double s, std::uint64_t N) {
  if (a == 0) throw DomainError("F_a: a must be >= 1");
  if (!(s > 1.0)) throw DomainError("F_a: s must be > 1");
  if (N == 0) throw DomainError("F_a: N must be >= 1");
  if (N > arith::kWindowSieveMax) throw BudgetError("F_a: N too large");
  const constants::LocalWeights weights(a);
  CompensatedSum total;
  std::vector<double> w;
  for (std::uint64_t lo = 1; lo <= N; lo += kWindow) {
    const std::uint64_t hi = std::min(N, lo + kWindow - 1);
    w.assign(hi - lo + 1, 1.0);
    arith::factor_window(lo, hi, [&](std::size_t j, std::uint64_t p, std::uint32_t e) {
      w[j] *= weights(p, e);
    });
    for (std::size_t j = 0; j < w.size(); ++j) {
      total.add(w[j] * std::pow(static_cast<double>(lo + j), -s));
    }
  }
  return total.value();
}

double phi_local(std::uint64_t p, double s) {
  check_s(s);
  return std::exp(log_phi_local(p, s));
}

double psi_a(std::uint64_t a, double s) {
  if (a == 0) throw DomainError("psi_a: a must be >= 1");
  check_s(s);
  double psi = 1.0;
  const auto fa = arith::factorize(a);
  for (const auto& [p, m] : fa.pairs()) {
    const double y = std::pow(static_cast<double>(p), -s);
    const double num = constants::local_numerator(p, m, y);
    const double den = 1.0 + constants::beta_prime_double(p) * constants::series_G(y);
    if (!(num > 0.0) || !(den > 0.0)) {
      throw DomainError("psi_a: non-positive local factor at p = " + std::to_string(p));
    }
    psi *= num / den;
  }
  return psi;
}

PhiValue phi_a(std::uint64_t a, double s, std::uint64_t P, unsigned threads) {
  check_s(s);
  if (P < 2) throw DomainError("phi_a: prime cutoff must be >= 2");
  const double psi = psi_a(a, s);

  const std::uint64_t root = arith::isqrt(P);
  const auto base = arith::primes_up_to(static_cast<std::uint32_t>(std::max<std::uint64_t>(root, 2)));
  const std::uint64_t chunks = (P + kPrimeChunk - 1) / kPrimeChunk;
  std::vector<CompensatedSum> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * kPrimeChunk + 1;
    const std::uint64_t hi = std::min(P, lo + kPrimeChunk - 1);
    CompensatedSum local;
    arith::PrimeSegment(lo, hi, base).for_each([&](std::uint64_t p) { local.add(log_phi_local(p, s)); });
    partial[c] = local;
  });
  CompensatedSum log_sum;
  for (const auto& part : partial) log_sum += part;

  const double value = std::exp(log_sum.value()) * psi;
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("phi_a: truncated product is not positive");

  // Per prime |log Phi_p(s)| <= 2 p^-s/(p-1) + p^-2s/4; summing against the
  // integers beyond P gives the bound below.
  const auto Pd = static_cast<double>(P);
  const double tail = 2.0 * (Pd / (Pd - 1.0)) * std::pow(Pd, -s) / s +
                      std::pow(Pd, 1.0 - 2.0 * s) / (4.0 * (2.0 * s - 1.0));
  return {value, tail, psi, P};
}

SeriesEvaluation identity_residual(std::uint64_t a, double s, std::uint64_t N, std::uint64_t P,
                                   unsigned threads) {
  if (!(s > 1.0)) throw DomainError("identity_residual: s must be > 1");
  SeriesEvaluation out{a, s, N, P, 0, 0, 0, 0, 0};
  out.lhs = F_a_truncated(a, s, N);
  const constants::ZetaValue zeta = constants::zeta_direct(s);
  const PhiValue phi = phi_a(a, s, P, threads);
  const double root_zeta = std::sqrt(zeta.value);
  out.rhs = root_zeta * phi.value;
  out.residual = std::fabs(out.lhs - out.rhs);
  const double weight = constants::LocalWeights(a).supremum();
  out.lhs_tail_bound = weight * std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
  // sqrt is 1/2-Lipschitz in the log scale: d sqrt(z) <= dz / (2 sqrt z).
  out.rhs_tail_bound = out.rhs * std::expm1(phi.tail_bound) + phi.value * zeta.bound / (2.0 * root_zeta);
  return out;
}

double phi_a_one_over_sqrt_pi(std::uint64_t a, const constants::EulerProductResult& K,
                              const constants::EulerProductResult& C) {
  const double b = constants::beta(a).to_double();
  return constants::K_of_a(a, K) / (C.value * b);
}

double E_prediction(std::uint64_t a, double x, const constants::EulerProductResult& K,
                    const constants::EulerProductResult& C) {
  if (!(x > 1.0)) throw DomainError("E_prediction: x must be > 1");
  return phi_a_one_over_sqrt_pi(a, K, C) * x / std::sqrt(std::log(x));
}

}  // namespace tauratio::genfun
