#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "constants/euler.hpp"
#include "empirical/streaming.hpp"

namespace tauratio::empirical {

enum class ReportKind { theorem_ratio, E_ratio, lemma10, lemma12 };

const char* report_kind_name(ReportKind kind);

struct CheckpointRow {
  std::uint64_t x;
  double raw_sum;
  std::optional<double> prediction;
  std::optional<double> normalized_deviation;
  double elapsed;
};

struct Verdict {
  bool applicable = false;
  bool passed = true;
  std::string rule;
  std::string detail;
};

struct ConvergenceReport {
  std::uint64_t a = 1;
  std::uint32_t k = 2;
  ReportKind kind = ReportKind::theorem_ratio;
  std::vector<CheckpointRow> rows;
  Verdict verdict;
};

// Rows of S_{a,k}. With K(a) given (k = 2 only) the prediction is
// K(a) x sqrt(ln x) and the deviation |S/(x sqrt(ln x)) - K(a)|.
std::vector<CheckpointRow> sum_S_a(std::uint64_t a, std::uint32_t k, std::span<const std::uint64_t> checkpoints,
                                   std::optional<double> K_a, const StreamOptions& options = {});

// Rows of E_a. With Phi_a(1)/sqrt(pi) given the prediction is E_prediction
// and the deviation |E sqrt(ln x)/x - Phi_a(1)/sqrt(pi)|.
std::vector<CheckpointRow> sum_E_a(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                   std::optional<double> phi_over_sqrt_pi, const StreamOptions& options = {});

// Builders over streamed points.
ConvergenceReport theorem_ratio_report(std::uint64_t a, std::uint32_t k, std::span<const StreamPoint> points,
                                       std::optional<double> K_a);
ConvergenceReport E_ratio_report(std::uint64_t a, std::span<const StreamPoint> points, double phi_over_sqrt_pi);
ConvergenceReport lemma12_report(std::uint64_t a, std::span<const StreamPoint> points, double C);

// R(x) = |S_a - C beta(a) ln x E_a| / (x ln ln x); every checkpoint must be
// >= 16. Verdict: R(x_max) <= max(1, 2 R(x_min)).
ConvergenceReport lemma12_consistency(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                      const constants::EulerProductResult& C, const StreamOptions& options = {});

struct ConvergencePair {
  ConvergenceReport theorem_ratio;
  ConvergenceReport E_ratio;
};

// Checkpoints must span at least three decades (max >= 1000 min).
ConvergencePair convergence_report(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                   const constants::EulerProductResult& K,
                                   const constants::EulerProductResult& C, const StreamOptions& options = {});

struct VerifyResult {
  std::vector<StreamPoint> points;
  ConvergenceReport theorem_ratio;
  ConvergenceReport E_ratio;
  ConvergenceReport lemma12;
};

// All three tracks from one streaming pass. For k != 2 the theorem and
// R(x) tracks carry no predictions.
VerifyResult verify(std::uint64_t a, std::uint32_t k, std::span<const std::uint64_t> checkpoints,
                    const constants::EulerProductResult& K, const constants::EulerProductResult& C,
                    const StreamOptions& options = {});

// Totient sums against their C log x + L main term. Verdict at the last
// checkpoint: |deviation| <= max(1e-2, 50 ln^2 x / x).
ConvergenceReport lemma10_report(std::uint64_t m, std::span<const std::uint64_t> checkpoints,
                                 const constants::EulerProductResult& C, const constants::EulerProductResult& L,
                                 const StreamOptions& options = {});

void require_three_decades(std::span<const std::uint64_t> checkpoints);
void require_lemma12_checkpoints(std::span<const std::uint64_t> checkpoints);

}  // namespace tauratio::empirical
