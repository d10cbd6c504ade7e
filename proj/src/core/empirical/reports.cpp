#include "empirical/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "common/errors.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "genfun/dirichlet.hpp"

namespace tauratio::empirical {
namespace {

// Predictions need ln x > 1 to be meaningful; smaller checkpoints get none.
constexpr std::uint64_t kPredictionMin = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<StreamPoint> stream(std::uint64_t a, std::uint32_t k, std::span<const std::uint64_t> checkpoints,
                                bool want_E, const StreamOptions& options) {
  return stream_sums(a, k, checkpoints, want_E, options);
}

std::vector<double> deviations(const ConvergenceReport& r) {
  std::vector<double> d;
  for (const auto& row : r.rows) {
    if (row.normalized_deviation) d.push_back(*row.normalized_deviation);
  }
  return d;
}

}  // namespace

const char* report_kind_name(ReportKind kind) {
  switch (kind) {
    case ReportKind::theorem_ratio:
      return "theorem_ratio";
    case ReportKind::E_ratio:
      return "E_ratio";
    case ReportKind::lemma10:
      return "lemma10";
    case ReportKind::lemma12:
      return "lemma12";
  }
  return "unknown";
}

void require_three_decades(std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.empty() || checkpoints.back() / 1000 < checkpoints.front()) {
    throw ConfigError("convergence report needs checkpoints spanning at least three decades");
  }
}

void require_lemma12_checkpoints(std::span<const std::uint64_t> checkpoints) {
  for (auto x : checkpoints) {
    if (x < 16) throw DomainError("lemma12: checkpoints must be >= 16, got " + std::to_string(x));
  }
}

ConvergenceReport theorem_ratio_report(std::uint64_t a, std::uint32_t k, std::span<const StreamPoint> points,
                                       std::optional<double> K_a) {
  ConvergenceReport r{a, k, ReportKind::theorem_ratio, {}, {}};
  for (const auto& p : points) {
    CheckpointRow row{p.x, p.S.value(), std::nullopt, std::nullopt, p.elapsed};
    if (K_a && p.x >= kPredictionMin) {
      const auto x = static_cast<double>(p.x);
      const double root = std::sqrt(std::log(x));
      row.prediction = *K_a * x * root;
      row.normalized_deviation = std::fabs(row.raw_sum / (x * root) - *K_a);
    }
    r.rows.push_back(row);
  }
  r.verdict.rule = "deviation non-increasing over the last three checkpoints, at most one violation";
  const auto d = deviations(r);
  if (!K_a || d.size() < 3) {
    r.verdict.detail = K_a ? "fewer than three predicted checkpoints" : "no prediction for k != 2";
    return r;
  }
  r.verdict.applicable = true;
  int increases = 0;
  for (std::size_t i = d.size() - 2; i < d.size(); ++i) increases += d[i] > d[i - 1] ? 1 : 0;
  r.verdict.passed = increases <= 1;
  r.verdict.detail = "increases among the last three: " + std::to_string(increases);
  return r;
}

ConvergenceReport E_ratio_report(std::uint64_t a, std::span<const StreamPoint> points, double phi_over_sqrt_pi) {
  ConvergenceReport r{a, 2, ReportKind::E_ratio, {}, {}};
  for (const auto& p : points) {
    CheckpointRow row{p.x, p.E.value(), std::nullopt, std::nullopt, p.elapsed};
    if (p.x >= kPredictionMin) {
      const auto x = static_cast<double>(p.x);
      const double root = std::sqrt(std::log(x));
      row.prediction = phi_over_sqrt_pi * x / root;
      row.normalized_deviation = std::fabs(row.raw_sum * root / x - phi_over_sqrt_pi);
    }
    r.rows.push_back(row);
  }
  r.verdict.rule = "deviation strictly decreasing across checkpoints";
  const auto d = deviations(r);
  if (d.size() < 2) {
    r.verdict.detail = "fewer than two predicted checkpoints";
    return r;
  }
  r.verdict.applicable = true;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (!(d[i] < d[i - 1])) {
      r.verdict.passed = false;
      r.verdict.detail = "not decreasing at x = " + std::to_string(r.rows[r.rows.size() - d.size() + i].x);
      return r;
    }
  }
  r.verdict.detail = "first " + fmt(d.front()) + ", last " + fmt(d.back());
  return r;
}

ConvergenceReport lemma12_report(std::uint64_t a, std::span<const StreamPoint> points, double C) {
  ConvergenceReport r{a, 2, ReportKind::lemma12, {}, {}};
  const double b = constants::beta(a).to_double();
  for (const auto& p : points) {
    if (p.x < 16) throw DomainError("lemma12: checkpoints must be >= 16, got " + std::to_string(p.x));
    const auto x = static_cast<double>(p.x);
    const double lx = std::log(x);
    const double S = p.S.value();
    const double main = C * b * lx * p.E.value();
    r.rows.push_back({p.x, S, main, std::fabs(S - main) / (x * std::log(lx)), p.elapsed});
  }
  r.verdict.rule = "R(x_max) <= max(1, 2 R(x_min))";
  if (r.rows.empty()) return r;
  r.verdict.applicable = true;
  const double first = *r.rows.front().normalized_deviation;
  const double last = *r.rows.back().normalized_deviation;
  const double ceiling = std::max(1.0, 2.0 * first);
  r.verdict.passed = last <= ceiling;
  r.verdict.detail = "R(x_min) " + fmt(first) + ", R(x_max) " + fmt(last) + ", ceiling " + fmt(ceiling);
  return r;
}

std::vector<CheckpointRow> sum_S_a(std::uint64_t a, std::uint32_t k, std::span<const std::uint64_t> checkpoints,
                                   std::optional<double> K_a, const StreamOptions& options) {
  if (k != 2) K_a.reset();
  const auto points = stream(a, k, checkpoints, false, options);
  return theorem_ratio_report(a, k, points, K_a).rows;
}

std::vector<CheckpointRow> sum_E_a(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                   std::optional<double> phi_over_sqrt_pi, const StreamOptions& options) {
  const auto points = stream(a, 2, checkpoints, true, options);
  auto rows = E_ratio_report(a, points, phi_over_sqrt_pi.value_or(0.0)).rows;
  if (!phi_over_sqrt_pi) {
    for (auto& row : rows) {
      row.prediction.reset();
      row.normalized_deviation.reset();
    }
  }
  return rows;
}

ConvergenceReport lemma12_consistency(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                      const constants::EulerProductResult& C, const StreamOptions& options) {
  require_lemma12_checkpoints(checkpoints);
  const auto points = stream(a, 2, checkpoints, true, options);
  return lemma12_report(a, points, C.value);
}

ConvergencePair convergence_report(std::uint64_t a, std::span<const std::uint64_t> checkpoints,
                                   const constants::EulerProductResult& K,
                                   const constants::EulerProductResult& C, const StreamOptions& options) {
  require_three_decades(checkpoints);
  const auto points = stream(a, 2, checkpoints, true, options);
  return {theorem_ratio_report(a, 2, points, constants::K_of_a(a, K)),
          E_ratio_report(a, points, genfun::phi_a_one_over_sqrt_pi(a, K, C))};
}

VerifyResult verify(std::uint64_t a, std::uint32_t k, std::span<const std::uint64_t> checkpoints,
                    const constants::EulerProductResult& K, const constants::EulerProductResult& C,
                    const StreamOptions& options) {
  require_three_decades(checkpoints);
  if (k == 2) require_lemma12_checkpoints(checkpoints);
  VerifyResult out;
  out.points = stream(a, k, checkpoints, true, options);
  const std::optional<double> K_a = k == 2 ? std::optional(constants::K_of_a(a, K)) : std::nullopt;
  out.theorem_ratio = theorem_ratio_report(a, k, out.points, K_a);
  out.E_ratio = E_ratio_report(a, out.points, genfun::phi_a_one_over_sqrt_pi(a, K, C));
  if (k == 2) {
    out.lemma12 = lemma12_report(a, out.points, C.value);
  } else {
    out.lemma12 = {a, k, ReportKind::lemma12, {}, {false, true, "R(x_max) <= max(1, 2 R(x_min))", "k != 2"}};
  }
  return out;
}

ConvergenceReport lemma10_report(std::uint64_t m, std::span<const std::uint64_t> checkpoints,
                                 const constants::EulerProductResult& C, const constants::EulerProductResult& L,
                                 const StreamOptions& options) {
  const auto sums = inv_phi_sums(m, checkpoints, options);
  ConvergenceReport r{m, 2, ReportKind::lemma10, {}, {}};
  for (std::size_t i = 0; i < sums.size(); ++i) {
    CheckpointRow row{checkpoints[i], sums[i], std::nullopt, std::nullopt, 0.0};
    if (checkpoints[i] >= kPredictionMin) {
      row.prediction = constants::lemma10_prediction(m, static_cast<double>(checkpoints[i]), C, L);
      row.normalized_deviation = std::fabs(sums[i] - *row.prediction);
    }
    r.rows.push_back(row);
  }
  r.verdict.rule = "|sum - prediction| <= max(1e-2, 50 ln^2 x / x) at the last checkpoint";
  const auto& last = r.rows.back();
  if (!last.normalized_deviation) {
    r.verdict.detail = "last checkpoint below 3";
    return r;
  }
  const auto x = static_cast<double>(last.x);
  const double tolerance = std::max(1e-2, 50.0 * std::log(x) * std::log(x) / x);
  r.verdict.applicable = true;
  r.verdict.passed = *last.normalized_deviation <= tolerance;
  r.verdict.detail = "deviation " + fmt(*last.normalized_deviation) + ", tolerance " + fmt(tolerance);
  return r;
}

}  // namespace tauratio::empirical
