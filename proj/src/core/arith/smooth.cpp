#include "arith/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arith/factorization.hpp"
#include "common/errors.hpp"
#include "common/summation.hpp"

namespace tauratio::arith {
namespace {

constexpr double kMaxBound = 1.8e19;

std::vector<std::uint64_t> distinct_primes_of(std::uint64_t d) {
  std::vector<std::uint64_t> primes;
  const auto fd = factorize(d);
  for (const auto& pp : fd.pairs()) primes.push_back(pp.prime);
  return primes;
}

double a_priori_count(double bound, std::size_t s) {
  // Also covers 1 <= bound < 2, where (8 ln bound)^s may drop below 1.
  return std::max(1.0, std::pow(8.0 * std::log(std::max(bound, 2.0)), static_cast<double>(s)));
}

// Depth-first walk over exponent vectors in prime order.
void enumerate(const std::vector<std::uint64_t>& primes, std::size_t index, std::uint64_t current,
               std::uint64_t limit, std::vector<std::uint64_t>& out) {
  if (index == primes.size()) {
    out.push_back(current);
    return;
  }
  const std::uint64_t p = primes[index];
  for (std::uint64_t v = current;;) {
    enumerate(primes, index + 1, v, limit, out);
    if (v > limit / p) break;
    v *= p;
  }
}

std::vector<std::uint64_t> enumerate_up_to(std::uint64_t d, double bound,
                                           const std::vector<std::uint64_t>& primes,
                                           const SmoothLimits& limits) {
  if (d < 2) throw DomainError("smooth_sequence: d must be >= 2");
  if (!(bound >= 1.0)) throw DomainError("smooth_sequence: bound must be >= 1");
  if (bound > kMaxBound) throw DomainError("smooth_sequence: bound exceeds 1.8e19");
  const double expected = a_priori_count(bound, primes.size());
  if (expected > static_cast<double>(limits.max_elements)) {
    throw BudgetError("smooth_sequence: count bound " + std::to_string(expected) +
                      " exceeds the element budget");
  }
  std::vector<std::uint64_t> out;
  enumerate(primes, 0, 1, static_cast<std::uint64_t>(std::floor(bound)), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double SmoothSequence::count_bound() const {
  return std::pow(8.0 * std::log(bound), static_cast<double>(primes.size()));
}

SmoothSequence smooth_sequence(std::uint64_t d, double bound, const SmoothLimits& limits) {
  SmoothSequence seq;
  seq.d = d;
  seq.bound = bound;
  if (d >= 2) seq.primes = distinct_primes_of(d);
  seq.elements = enumerate_up_to(d, bound, seq.primes, limits);
  return seq;
}

double smooth_reciprocal_tail(std::uint64_t d, double bound, double cutoff,
                              const SmoothLimits& limits) {
  if (!(cutoff >= bound)) throw DomainError("smooth_reciprocal_tail: cutoff must be >= bound");
  const auto primes = d >= 2 ? distinct_primes_of(d) : std::vector<std::uint64_t>{};
  const auto all = enumerate_up_to(d, cutoff, primes, limits);
  CompensatedSum sum;
  for (std::uint64_t delta : all) {
    if (static_cast<double>(delta) > bound) sum.add(1.0 / static_cast<double>(delta));
  }
  return sum.value();
}

}  // namespace tauratio::arith
