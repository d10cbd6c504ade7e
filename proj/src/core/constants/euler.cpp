#include "constants/euler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith/factorization.hpp"
#include "arith/primes.hpp"
#include "common/errors.hpp"
#include "common/parallel.hpp"
#include "common/summation.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"

namespace tauratio::constants {
namespace {

constexpr std::uint64_t kChunk = UINT64_C(1) << 22;
constexpr std::uint64_t kMinKCutoff = 11;
constexpr double kThetaConstant = 1.01624;  // theta(x) < 1.01624 x for x > 0
// |theta(x) - x| < 0.2 x / ln^2 x for x >= 3594641 (Dusart).
constexpr double kDusartEpsilon = 0.2;
constexpr std::uint64_t kDusartThreshold = 3'594'641;

struct PrimeSum {
  double sum;
  std::uint64_t count;
};

// Sums term(p) over primes p <= cutoff. The range is split into fixed chunks
// whose partial sums are combined in ascending order, so the result does not
// depend on the thread count.
template <class Term>
PrimeSum sum_over_primes(std::uint64_t cutoff, unsigned threads, Term term) {
  if (cutoff < 2) return {0.0, 0};
  const std::uint64_t root = arith::isqrt(cutoff);
  const std::vector<std::uint32_t> base =
      arith::primes_up_to(static_cast<std::uint32_t>(std::max<std::uint64_t>(root, 2)));
  const std::uint64_t chunks = (cutoff + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partial(chunks);
  std::vector<std::uint64_t> counts(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk + 1;
    const std::uint64_t hi = std::min(cutoff, lo + kChunk - 1);
    arith::PrimeSegment segment(lo, hi, base);
    CompensatedSum local;
    std::uint64_t n = 0;
    segment.for_each([&](std::uint64_t p) {
      local.add(term(p));
      ++n;
    });
    partial[c] = local;
    counts[c] = n;
  });
  CompensatedSum total;
  std::uint64_t count = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    total += partial[c];
    count += counts[c];
  }
  return {total.value(), count};
}

void check_target(double target_tail) {
  if (!(target_tail >= kMinTargetTail && target_tail <= kMaxTargetTail)) {
    throw DomainError("target tail must lie in [1e-12, 1e-2]");
  }
}

// Coefficients c_k of K's local factor minus one as a power series in x = 1/p:
// factor = (1-x)^{-1/2} (x + (1-x)^2 g(x)) with g(x) = sum x^j/(j+1).
// c_0 = 1, c_1 = 0 and c_k >= 0 for k >= 2 (c_2 = 11/24).
constexpr int kSeriesTerms = 20;

std::array<double, kSeriesTerms> k_factor_series() {
  std::array<double, kSeriesTerms> a{};  // (1-x)^{-1/2}
  std::array<double, kSeriesTerms> b{};  // x + (1-x)^2 g(x)
  a[0] = 1.0;
  for (int k = 1; k < kSeriesTerms; ++k) a[k] = a[k - 1] * (2.0 * k - 1) / (2.0 * k);
  b[0] = 1.0;
  b[1] = -0.5;
  for (int j = 2; j < kSeriesTerms; ++j) b[j] = 2.0 / ((j - 1.0) * j * (j + 1.0));
  std::array<double, kSeriesTerms> c{};
  for (int k = 2; k < kSeriesTerms; ++k) {
    // a_k b_0 + a_{k-1} b_1 = a_{k-1} (k-1)/(2k), grouped to avoid cancellation.
    double sum = a[k - 1] * (k - 1.0) / (2.0 * k);
    for (int i = 0; i <= k - 2; ++i) sum += a[i] * b[k - i];
    c[k] = sum;
  }
  return c;
}

const std::array<double, kSeriesTerms>& k_series() {
  static const auto series = k_factor_series();
  return series;
}

// Sum of p^-2 over primes p > P. Below the Dusart threshold this is bounded by
// the integer sum 1/P; above it, by integrating 1/(t^2 ln t) against theta.
double prime_square_tail(std::uint64_t cutoff) {
  const auto P = static_cast<double>(cutoff);
  if (cutoff < kDusartThreshold) return 1.0 / P;
  const double lp = std::log(P);
  return (1.0 + 3.0 * kDusartEpsilon / (lp * lp)) / (P * lp);
}

double big_K_tail(std::uint64_t cutoff) {
  // factor - 1 <= 0.5/p^2 needs p >= 11; below that use the p = 2 constant.
  if (cutoff < kMinKCutoff) return 0.79 / static_cast<double>(cutoff);
  return 0.5 * prime_square_tail(cutoff);
}

double landau_C_tail(std::uint64_t cutoff) {
  const auto P = static_cast<double>(cutoff);
  if (cutoff < kDusartThreshold) return 1.0 / P;  // sum_{n > P} 1/(n(n-1))
  return (P + 1.0) / P * prime_square_tail(cutoff);
}

// For L the refined bound comes with a main-term estimate of the omitted sum,
// int_P^inf dt/(t^2 - t + 1), which is added to the value.
double prime_log_main(std::uint64_t cutoff) {
  const auto P = static_cast<double>(cutoff);
  return 2.0 / std::sqrt(3.0) * std::atan(std::sqrt(3.0) / (2.0 * P - 1.0));
}

double prime_log_tail(std::uint64_t cutoff) {
  // Stieltjes integration against theta with g(t) = 1/(t^2 - t + 1).
  const auto P = static_cast<double>(cutoff);
  const double g = 1.0 / (P * P - P + 1.0);
  if (cutoff < kDusartThreshold) return kThetaConstant * (P * g + 1.0 / (P - 1.0));
  const double lp = std::log(P);
  return kDusartEpsilon / (lp * lp) * (2.0 * P * g + prime_log_main(cutoff));
}

// Smallest cutoff in [lowest, max_cutoff] whose bound meets the target; the
// bound functions are non-increasing.
template <class Bound>
std::uint64_t find_cutoff(double target, std::uint64_t lowest, const EulerOptions& options, Bound bound,
                          const char* what) {
  const double best = bound(options.max_cutoff);
  if (best > target) {
    throw BudgetError(std::string(what) + ": target tail unreachable within the prime budget; best bound " +
                          std::to_string(best),
                      best);
  }
  std::uint64_t lo = lowest;
  std::uint64_t hi = options.max_cutoff;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (bound(mid) <= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

double big_K_factor(std::uint64_t p) {
  const auto x = static_cast<double>(p);
  return 1.0 / std::sqrt(x * (x - 1.0)) + std::sqrt(1.0 - 1.0 / x) * (x - 1.0) * log_ratio(p);
}

double big_K_log_factor(std::uint64_t p) {
  if (p < 128) return std::log(big_K_factor(p));
  const double x = 1.0 / static_cast<double>(p);
  const auto& c = k_series();
  double excess = 0.0;
  for (int k = kSeriesTerms - 1; k >= 2; --k) excess = (excess + c[k]) * x;
  excess *= x;
  return std::log1p(excess);
}

EulerProductResult big_K_at_cutoff(std::uint64_t cutoff, const EulerOptions& options) {
  if (cutoff < 2) throw DomainError("big_K: cutoff must be >= 2");
  const PrimeSum s = sum_over_primes(cutoff, options.threads, big_K_log_factor);
  return {std::exp(s.sum) / std::sqrt(std::numbers::pi), cutoff, big_K_tail(cutoff), s.count};
}

EulerProductResult big_K(double target_tail, const EulerOptions& options) {
  check_target(target_tail);
  return big_K_at_cutoff(find_cutoff(target_tail, kMinKCutoff, options, big_K_tail, "big_K"), options);
}

EulerProductResult landau_C_at_cutoff(std::uint64_t cutoff, const EulerOptions& options) {
  if (cutoff < 2) throw DomainError("landau_C: cutoff must be >= 2");
  const PrimeSum s = sum_over_primes(cutoff, options.threads, [](std::uint64_t p) {
    const auto x = static_cast<double>(p);
    return std::log1p(1.0 / (x * (x - 1.0)));
  });
  return {std::exp(s.sum), cutoff, landau_C_tail(cutoff), s.count};
}

EulerProductResult landau_C(double target_tail, const EulerOptions& options) {
  check_target(target_tail);
  return landau_C_at_cutoff(find_cutoff(target_tail, 2, options, landau_C_tail, "landau_C"), options);
}

EulerProductResult prime_log_sum_at_cutoff(std::uint64_t cutoff, const EulerOptions& options) {
  if (cutoff < 2) throw DomainError("prime_log_sum: cutoff must be >= 2");
  const PrimeSum s = sum_over_primes(cutoff, options.threads, [](std::uint64_t p) {
    const auto x = static_cast<double>(p);
    return std::log(x) / (x * x - x + 1.0);
  });
  const double main = cutoff >= kDusartThreshold ? prime_log_main(cutoff) : 0.0;
  return {s.sum + main, cutoff, prime_log_tail(cutoff), s.count};
}

EulerProductResult prime_log_sum(double target_tail, const EulerOptions& options) {
  check_target(target_tail);
  return prime_log_sum_at_cutoff(find_cutoff(target_tail, 2, options, prime_log_tail, "prime_log_sum"),
                                 options);
}

ZetaValue zeta_direct(double s, std::uint64_t terms) {
  if (!(s > 1.0)) throw DomainError("zeta_direct: s must be > 1");
  if (terms < 1) throw DomainError("zeta_direct: need at least one term");
  CompensatedSum sum;
  for (std::uint64_t n = terms; n >= 1; --n) sum.add(std::pow(static_cast<double>(n), -s));
  const auto M = static_cast<double>(terms);
  const double upper = std::pow(M, 1.0 - s) / (s - 1.0);
  const double lower = std::pow(M + 1.0, 1.0 - s) / (s - 1.0);
  const double value = sum.value() + 0.5 * (upper + lower);
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * value;
  return {value, 0.5 * (upper - lower) + rounding};
}

ZetaValue landau_C_from_zeta() {
  const ZetaValue z3 = zeta_direct(3.0);
  const double pi4 = std::pow(std::numbers::pi, 4);
  const double scale = 945.0 / (6.0 * pi4);  // zeta(2)/zeta(6)
  return {scale * z3.value, scale * z3.bound + 4.0 * std::numeric_limits<double>::epsilon()};
}

LandauConstants C_and_prime_sums(double target_tail, const EulerOptions& options) {
  LandauConstants out{landau_C(target_tail, options), prime_log_sum(target_tail, options),
                      landau_C_from_zeta()};
  // The direct product is a lower bound: C_true in [C, C exp(tail)].
  const double gap = std::fabs(out.C.value - out.C_zeta.value);
  const double allowed = out.C.value * std::expm1(out.C.tail_bound) + out.C_zeta.bound + 1e-13;
  if (gap > allowed) {
    throw std::logic_error("C_and_prime_sums: direct product and zeta quotient disagree by " +
                           std::to_string(gap));
  }
  return out;
}

double K_of_a(std::uint64_t a, const EulerProductResult& K) { return K.value * kappa(a).kappa; }

double K_of_a(std::uint64_t a, double target_tail, const EulerOptions& options) {
  return K_of_a(a, big_K(target_tail, options));
}

double lemma10_correction(std::uint64_t m) {
  if (m == 0) throw DomainError("lemma10: m must be >= 1");
  double correction = 0.0;
  const auto fm = arith::factorize(m);
  for (const auto& pp : fm.pairs()) {
    const auto p = static_cast<double>(pp.prime);
    correction += p * p * std::log(p) / ((p - 1.0) * (p * p - p + 1.0));
  }
  return correction;
}

double lemma10_prediction(std::uint64_t m, double x, const EulerProductResult& C,
                          const EulerProductResult& L) {
  if (!(x >= 3.0)) throw DomainError("lemma10_prediction: x must be >= 3");
  const double b = beta(m).to_double();
  return C.value * b * (std::log(x) + kEulerGamma - L.value + lemma10_correction(m));
}

}  // namespace tauratio::constants
