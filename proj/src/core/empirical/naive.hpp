#pragma once

#include <cstdint>

#include "constants/rational.hpp"

// Slow reference implementations used as oracles. None of them touches the
// sieves.
namespace tauratio::empirical::naive {

std::uint64_t tau(std::uint64_t n);

// Ordered triples (x, y, z) with x y z = n, counted by brute force.
std::uint64_t tau3(std::uint64_t n);

// tau_k by recursion over divisors.
std::uint64_t tau_k(std::uint64_t n, std::uint32_t k);

// Euler phi by trial division.
std::uint64_t totient(std::uint64_t n);

// sum_{n <= x} tau(n) / tau_k(n + a), as a double loop over n and divisors.
constants::Rational sum_S_a(std::uint64_t a, std::uint32_t k, std::uint64_t x);

// sum_{n <= x} e_a(n) / tau(n) with e_a from its defining divisor sum.
constants::Rational sum_E_a(std::uint64_t a, std::uint64_t x);

// sum over q <= x coprime to m of 1/phi(q).
constants::Rational sum_inv_phi(std::uint64_t m, std::uint64_t x);

}  // namespace tauratio::empirical::naive
