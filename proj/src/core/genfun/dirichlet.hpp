#pragma once

#include <cstdint>

#include "constants/euler.hpp"

namespace tauratio::genfun {

// sum_{n <= N} e_a(n) / (tau(n) n^s).
double F_a_truncated(std::uint64_t a, double s, std::uint64_t N);

// Phi_a(s) truncated to primes p <= P. tail_bound bounds |log of the omitted
// part| of the infinite product; psi is the finite correction over p | a.
struct PhiValue {
  double value;
  double tail_bound;
  double psi;
  std::uint64_t cutoff;
};

// Local factor of Phi (the a = 1 case) at p:
// (1 - p^-s)^{1/2} (1 - beta(p) - beta(p) p^s ln(1 - p^-s)).
double phi_local(std::uint64_t p, double s);

// psi_a(s) = prod_{p | a} N_p(p^-s) / (1 + beta(p) G(p^-s)).
double psi_a(std::uint64_t a, double s);

// Rejects s <= 1/2 and P < 2.
PhiValue phi_a(std::uint64_t a, double s, std::uint64_t P, unsigned threads = 1);

struct SeriesEvaluation {
  std::uint64_t a;
  double s;
  std::uint64_t N;
  std::uint64_t P;
  double lhs;
  double rhs;
  double residual;
  double lhs_tail_bound;
  double rhs_tail_bound;
};

// Compares F_a truncated at N with sqrt(zeta(s)) Phi_a(s) truncated at P.
SeriesEvaluation identity_residual(std::uint64_t a, double s, std::uint64_t N, std::uint64_t P,
                                   unsigned threads = 1);

// Phi_a(1)/sqrt(pi), obtained as K(a) / (C beta(a)).
double phi_a_one_over_sqrt_pi(std::uint64_t a, const constants::EulerProductResult& K,
                              const constants::EulerProductResult& C);

// (Phi_a(1)/sqrt(pi)) x / sqrt(ln x), x > 1.
double E_prediction(std::uint64_t a, double x, const constants::EulerProductResult& K,
                    const constants::EulerProductResult& C);

}  // namespace tauratio::genfun
