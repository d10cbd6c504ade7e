#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "constants/rational.hpp"

namespace tauratio::constants {

// G(y) = sum_{k>=1} y^k / (k+1) for 0 <= y < 1, summed until the terms fall
// below 2^-70 of the total. At y = 1/p this is p ln(p/(p-1)) - 1.
double series_G(double y);

// ln(p/(p-1)) without cancellation for large p.
double log_ratio(std::uint64_t p);

// N_p(y) = 1 + sum_{k>=1} e_a(p^k)/(k+1) y^k for m = v_p(a) >= 0, in closed
// form: 1 + (m+1) G(y) + sum_{k<=m} (e_a(p^k) - (m+1))/(k+1) y^k, since
// e_a(p^k) = m + 1 for every k > m. For m = 0 it reduces to 1 + beta(p) G(y).
double local_numerator(std::uint64_t p, std::uint32_t m, double y);

struct LocalKappaFactor {
  std::uint64_t prime;
  std::uint32_t exponent;  // m = v_p(a)
  double numerator;        // 1 + sum e_a(p^k)/(k+1) p^-k
  double denominator;      // 1 + beta(p) sum p^-k/(k+1)
};

struct KappaBreakdown {
  std::uint64_t a = 1;
  double kappa = 1.0;
  std::vector<LocalKappaFactor> per_prime;
  Rational beta_a{1};
};

// kappa(a) = beta(a) * prod over p | a of numerator/denominator.
KappaBreakdown kappa(std::uint64_t a);

// Closed forms for kappa(p^m), m = 1..4, written with ln(p/(p-1)) directly.
// Throws DomainError for m outside 1..4 or composite p.
double kappa_closed(std::uint64_t p, unsigned m);

// Printed reference values, with the tolerance each one supports.
struct PublishedKappa {
  std::uint64_t a;
  std::uint64_t prime;
  unsigned exponent;
  const char* label;    // "2^2" style
  const char* printed;  // digits exactly as printed
  double tolerance;
};

std::span<const PublishedKappa> published_kappa_table();

}  // namespace tauratio::constants
