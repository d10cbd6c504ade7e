#pragma once

#include <cstdint>

namespace tauratio::constants {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// A truncated prime product (or prime sum) together with a rigorous bound on
// what the omitted primes contribute. For products the bound is on
// |log(true) - log(value)|; for sums it is on |true - value|.
struct EulerProductResult {
  double value = 0.0;
  std::uint64_t cutoff = 0;  // every prime <= cutoff is included
  double tail_bound = 0.0;
  std::uint64_t factor_count = 0;
};

struct EulerOptions {
  unsigned threads = 1;
  std::uint64_t max_cutoff = UINT64_C(4'000'000'000);
};

// Precision targets accepted by the converging entry points.
inline constexpr double kMinTargetTail = 1e-12;
inline constexpr double kMaxTargetTail = 1e-2;

// K = pi^{-1/2} prod_p (1/sqrt(p(p-1)) + sqrt(1-1/p)(p-1) ln(p/(p-1))).
// The local factor satisfies 0 < factor - 1 <= 0.5/p^2 for p >= 11, so the
// tail is at most 0.5 sum_{p > cutoff} p^-2. Throws BudgetError (carrying the
// best reachable bound) when the target needs a cutoff above max_cutoff.
EulerProductResult big_K(double target_tail, const EulerOptions& options = {});
EulerProductResult big_K_at_cutoff(std::uint64_t cutoff, const EulerOptions& options = {});

// Local factor of K at p and its logarithm (accurate for large p).
double big_K_factor(std::uint64_t p);
double big_K_log_factor(std::uint64_t p);

// C = prod_p (1 + 1/(p(p-1))).
EulerProductResult landau_C(double target_tail, const EulerOptions& options = {});
EulerProductResult landau_C_at_cutoff(std::uint64_t cutoff, const EulerOptions& options = {});

// L = sum_p ln p / (p^2 - p + 1). Past the Dusart threshold the value
// includes the integral estimate of the omitted primes, so it is no longer a
// plain partial sum.
EulerProductResult prime_log_sum(double target_tail, const EulerOptions& options = {});
EulerProductResult prime_log_sum_at_cutoff(std::uint64_t cutoff, const EulerOptions& options = {});

struct ZetaValue {
  double value;
  double bound;
};

// zeta(s), s > 1, by the direct series to `terms` plus the midpoint of the
// integral bracket for the remainder.
ZetaValue zeta_direct(double s, std::uint64_t terms = 1'000'000);

// zeta(2) zeta(3) / zeta(6) with zeta(2), zeta(6) in closed form.
ZetaValue landau_C_from_zeta();

struct LandauConstants {
  EulerProductResult C;
  EulerProductResult L;
  ZetaValue C_zeta;
};

// Computes C both ways and throws std::logic_error if they disagree beyond
// the combined bounds.
LandauConstants C_and_prime_sums(double target_tail, const EulerOptions& options = {});

// K(a) = K * kappa(a).
double K_of_a(std::uint64_t a, double target_tail, const EulerOptions& options = {});
double K_of_a(std::uint64_t a, const EulerProductResult& K);

// C beta(m) (ln x + gamma - L + sum_{p | m} p^2 ln p / ((p-1)(p^2-p+1))).
double lemma10_prediction(std::uint64_t m, double x, const EulerProductResult& C,
                          const EulerProductResult& L);

// The m-dependent correction sum_{p | m} p^2 ln p / ((p-1)(p^2-p+1)).
double lemma10_correction(std::uint64_t m);

}  // namespace tauratio::constants
