#include "empirical/streaming.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "arith/divisor_table.hpp"
#include "arith/factorization.hpp"
#include "arith/window_sieve.hpp"
#include "common/errors.hpp"
#include "common/parallel.hpp"
#include "constants/multiplicative.hpp"

namespace tauratio::empirical {
namespace {

using Clock = std::chrono::steady_clock;

struct Interval {
  std::uint64_t lo;
  std::uint64_t hi;
};

// Fixed grid of `window`-sized pieces of [1, last], additionally cut after
// every checkpoint.
std::vector<Interval> intervals(std::span<const std::uint64_t> checkpoints, std::uint64_t window) {
  std::vector<Interval> out;
  const std::uint64_t last = checkpoints.back();
  std::size_t c = 0;
  for (std::uint64_t lo = 1; lo <= last;) {
    std::uint64_t hi = std::min(last, (lo - 1) / window * window + window);
    while (c < checkpoints.size() && checkpoints[c] < lo) ++c;
    if (c < checkpoints.size() && checkpoints[c] < hi) hi = checkpoints[c];
    out.push_back({lo, hi});
    lo = hi + 1;
  }
  return out;
}

// Accumulates cumulative totals per checkpoint from per-interval parts, in
// interval order.
template <class Part, class Emit>
void accumulate(std::span<const std::uint64_t> checkpoints, const std::vector<Interval>& pieces,
                const std::vector<Part>& parts, Emit emit) {
  Part running{};
  std::size_t c = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    running += parts[i];
    while (c < checkpoints.size() && checkpoints[c] == pieces[i].hi) emit(c++, running);
  }
}

struct SumPart {
  FixedSum S;
  FixedSum E;
  double seconds = 0.0;

  SumPart& operator+=(const SumPart& o) {
    S += o.S;
    E += o.E;
    seconds += o.seconds;
    return *this;
  }
};

struct Local {
  std::uint32_t tau = 1;
  std::uint64_t tau_k = 1;
  double weight = 1.0;
};

void local_values(std::uint64_t lo, std::uint64_t hi, std::uint32_t k, const constants::LocalWeights* weights,
                  std::vector<Local>& out) {
  out.assign(hi - lo + 1, Local{});
  arith::factor_window(lo, hi, [&](std::size_t j, std::uint64_t p, std::uint32_t e) {
    Local& v = out[j];
    v.tau *= e + 1;
    if (__builtin_mul_overflow(v.tau_k, arith::tau_k_local(e, k), &v.tau_k)) {
      throw OverflowError("tau_k overflows 64 bits");
    }
    if (weights) v.weight *= (*weights)(p, e);
  });
}

}  // namespace

void validate_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t limit) {
  if (checkpoints.empty()) throw ConfigError("checkpoint list is empty");
  if (checkpoints.front() < 1) throw ConfigError("checkpoints must be >= 1");
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= checkpoints[i - 1]) throw ConfigError("checkpoints must be strictly increasing");
  }
  if (checkpoints.back() > limit) {
    throw ConfigError("checkpoint " + std::to_string(checkpoints.back()) + " exceeds the limit " +
                      std::to_string(limit));
  }
}

std::vector<StreamPoint> stream_sums(std::uint64_t a, std::uint32_t k,
                                     std::span<const std::uint64_t> checkpoints, bool want_E,
                                     const StreamOptions& options) {
  if (a == 0) throw DomainError("a must be >= 1");
  if (k < 2) throw DomainError("k must be >= 2");
  if (options.window == 0) throw ConfigError("window must be >= 1");
  validate_checkpoints(checkpoints, options.limit);

  const constants::LocalWeights weights(a);
  const auto pieces = intervals(checkpoints, options.window);
  std::vector<SumPart> parts(pieces.size());

  parallel_for(pieces.size(), options.threads, [&](std::size_t i) {
    const auto start = Clock::now();
    const auto [lo, hi] = pieces[i];
    const std::size_t count = hi - lo + 1;
    std::vector<Local> here;
    std::vector<Local> shifted;
    // One pass covers both n and n + a when the shift is within the window.
    if (a < count) {
      local_values(lo, hi + a, k, want_E ? &weights : nullptr, here);
    } else {
      local_values(lo, hi, k, want_E ? &weights : nullptr, here);
      local_values(lo + a, hi + a, k, nullptr, shifted);
    }
    SumPart part;
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint64_t tk = a < count ? here[j + a].tau_k : shifted[j].tau_k;
      part.S.add(static_cast<double>(here[j].tau) / static_cast<double>(tk));
      if (want_E) part.E.add(here[j].weight);
    }
    part.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    parts[i] = part;
  });

  std::vector<StreamPoint> out(checkpoints.size());
  accumulate(checkpoints, pieces, parts, [&](std::size_t c, const SumPart& total) {
    out[c] = {checkpoints[c], total.S, total.E, total.seconds};
  });
  return out;
}

std::vector<double> inv_phi_sums(std::uint64_t m, std::span<const std::uint64_t> checkpoints,
                                 const StreamOptions& options) {
  if (m == 0) throw DomainError("m must be >= 1");
  validate_checkpoints(checkpoints, options.limit);
  const auto pieces = intervals(checkpoints, options.window);
  std::vector<FixedSum> parts(pieces.size());

  parallel_for(pieces.size(), options.threads, [&](std::size_t i) {
    const auto [lo, hi] = pieces[i];
    std::vector<std::uint64_t> phi(hi - lo + 1, 1);
    std::vector<std::uint8_t> shares(hi - lo + 1, 0);
    arith::factor_window(lo, hi, [&](std::size_t j, std::uint64_t p, std::uint32_t e) {
      if (m % p == 0) shares[j] = 1;
      std::uint64_t f = p - 1;
      for (std::uint32_t r = 1; r < e; ++r) f *= p;
      phi[j] *= f;
    });
    FixedSum part;
    for (std::size_t j = 0; j < phi.size(); ++j) {
      if (!shares[j]) part.add(1.0 / static_cast<double>(phi[j]));
    }
    parts[i] = part;
  });

  std::vector<double> out(checkpoints.size());
  accumulate(checkpoints, pieces, parts,
             [&](std::size_t c, const FixedSum& total) { out[c] = total.value(); });
  return out;
}

double sum_inv_phi_coprime(std::uint64_t m, std::uint64_t x, const StreamOptions& options) {
  const std::uint64_t points[] = {x};
  return inv_phi_sums(m, points, options).front();
}

constants::Rational exact_sum_S_a(std::uint64_t a, std::uint32_t k, std::uint64_t x) {
  if (a == 0 || x == 0) throw DomainError("exact_sum_S_a: a and x must be >= 1");
  const auto tau = arith::sieve_window(1, x, arith::TableKind::tau);
  const auto tau_k = arith::sieve_window(1 + a, x + a, arith::TableKind::tau_k, k);
  constants::Rational sum;
  for (std::uint64_t n = 1; n <= x; ++n) {
    sum += constants::Rational(tau.counts()[n - 1], tau_k.counts()[n - 1]);
  }
  return sum;
}

constants::Rational exact_sum_E_a(std::uint64_t a, std::uint64_t x) {
  if (a == 0 || x == 0) throw DomainError("exact_sum_E_a: a and x must be >= 1");
  const constants::LocalWeights weights(a);
  std::vector<constants::Rational> term(x, constants::Rational(1));
  arith::factor_window(1, x, [&](std::size_t j, std::uint64_t p, std::uint32_t e) {
    term[j] *= weights.exact(p, e);
  });
  constants::Rational sum;
  for (const auto& t : term) sum += t;
  return sum;
}

constants::Rational exact_inv_phi(std::uint64_t m, std::uint64_t x) {
  if (m == 0 || x == 0) throw DomainError("exact_inv_phi: m and x must be >= 1");
  const auto phi = arith::sieve_window(1, x, arith::TableKind::phi);
  constants::Rational sum;
  for (std::uint64_t q = 1; q <= x; ++q) {
    if (std::gcd(q, m) == 1) sum += constants::Rational(1, static_cast<std::int64_t>(phi.totients()[q - 1]));
  }
  return sum;
}

}  // namespace tauratio::empirical
