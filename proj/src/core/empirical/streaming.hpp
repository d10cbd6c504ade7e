#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "common/summation.hpp"
#include "constants/rational.hpp"

namespace tauratio::empirical {

struct StreamOptions {
  unsigned threads = 1;
  std::uint64_t window = UINT64_C(1) << 20;
  std::uint64_t limit = 100'000'000;  // largest accepted checkpoint
};

// Cumulative sums at one checkpoint. The fixed-point totals make the values
// independent of window size and thread count.
struct StreamPoint {
  std::uint64_t x;
  FixedSum S;  // sum_{n <= x} tau(n) / tau_k(n + a)
  FixedSum E;  // sum_{n <= x} e_a(n) / tau(n), zero unless requested
  double elapsed;
};

// Throws ConfigError unless the list is non-empty, strictly increasing,
// starts at >= 1 and stays within the limit.
void validate_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t limit);

// One sieve pass over [1, max + a] yielding S_{a,k} (and E_a if asked) at every checkpoint.
std::vector<StreamPoint> stream_sums(std::uint64_t a, std::uint32_t k,
                                     std::span<const std::uint64_t> checkpoints, bool want_E,
                                     const StreamOptions& options = {});

// sum over q <= x with gcd(q, m) = 1 of 1/phi(q), at each checkpoint.
std::vector<double> inv_phi_sums(std::uint64_t m, std::span<const std::uint64_t> checkpoints,
                                 const StreamOptions& options = {});
double sum_inv_phi_coprime(std::uint64_t m, std::uint64_t x, const StreamOptions& options = {});

// Exact rational versions for small x. S and the totient sum take their
// values from sieved tables; E multiplies exact local weights.
constants::Rational exact_sum_S_a(std::uint64_t a, std::uint32_t k, std::uint64_t x);
constants::Rational exact_sum_E_a(std::uint64_t a, std::uint64_t x);
constants::Rational exact_inv_phi(std::uint64_t m, std::uint64_t x);

}  // namespace tauratio::empirical
