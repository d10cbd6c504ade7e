#pragma once

#include <cstdint>
#include <vector>

namespace tauratio::arith {

// The increasing sequence of positive integers all of whose prime factors
// divide d (1 included), enumerated completely up to `bound`.
struct SmoothSequence {
  std::uint64_t d = 2;
  double bound = 1.0;
  std::vector<std::uint64_t> primes;    // distinct primes of d
  std::vector<std::uint64_t> elements;  // sorted, complete up to bound

  std::size_t distinct_primes() const noexcept { return primes.size(); }

  // D1(bound): the number of elements <= bound.
  std::size_t d1() const noexcept { return elements.size(); }

  // (8 ln bound)^s, the explicit upper bound on D1 for bound >= 2.
  double count_bound() const;
};

struct SmoothLimits {
  std::uint64_t max_elements = UINT64_C(1) << 26;
};

// Throws DomainError for d < 2 or bound < 1, BudgetError when the a priori
// count bound exceeds limits.max_elements.
SmoothSequence smooth_sequence(std::uint64_t d, double bound, const SmoothLimits& limits = {});

// D2 restricted to an enumeration cutoff: sum of 1/delta over smooth delta
// with bound < delta <= cutoff, summed in increasing delta.
double smooth_reciprocal_tail(std::uint64_t d, double bound, double cutoff,
                              const SmoothLimits& limits = {});

}  // namespace tauratio::arith
