#include "app/commands.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "arith/divisor_table.hpp"
#include "arith/factorization.hpp"
#include "arith/smooth.hpp"
#include "common/errors.hpp"
#include "constants/euler.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "empirical/naive.hpp"
#include "empirical/reports.hpp"
#include "empirical/streaming.hpp"
#include "genfun/dirichlet.hpp"

namespace tauratio::app {
namespace {

using report::Column;
using report::Document;
using report::Table;
using report::Value;

// Prime cutoff for the Phi_a(1) product in the cross-module check.
constexpr std::uint64_t kPhiCutoff = 1'000'000;

constants::EulerOptions euler_options(const RunConfig& c) { return {c.threads, constants::EulerOptions{}.max_cutoff}; }

empirical::StreamOptions stream_options(const RunConfig& c) {
  empirical::StreamOptions o;
  o.threads = c.threads;
  o.limit = kMaxX;
  return o;
}

std::string sci(double v) { return report::format_scientific(v); }

void add_product(Document& doc, const std::string& name, const constants::EulerProductResult& r) {
  doc.field(name, r.value);
  doc.field(name + "_tail_bound", r.tail_bound);
  doc.field(name + "_cutoff", r.cutoff);
}

Document run_constants(const RunConfig& c) {
  Document doc{"constants", {}, {}, {}};
  const auto opts = euler_options(c);
  const auto K = constants::big_K(c.prec, opts);
  const auto landau = constants::C_and_prime_sums(c.prec, opts);
  const auto kap = constants::kappa(c.a);
  const double K_a = constants::K_of_a(c.a, K);
  const double phi_over = genfun::phi_a_one_over_sqrt_pi(c.a, K, landau.C);

  doc.field("a", c.a);
  doc.field("prec", c.prec);
  add_product(doc, "K", K);
  add_product(doc, "C", landau.C);
  doc.field("C_zeta", landau.C_zeta.value);
  add_product(doc, "L", landau.L);
  doc.field("gamma", constants::kEulerGamma);
  doc.field("beta_a", kap.beta_a.str());
  doc.field("kappa_a", kap.kappa);
  doc.field("K_a", K_a);
  doc.field("K_a_tail_bound", K_a * std::expm1(K.tail_bound));
  doc.field("Phi_a_1", phi_over * std::sqrt(std::numbers::pi));
  doc.field("Phi_a_1_over_sqrt_pi", phi_over);

  // Cross-module: C beta(a) Phi_a(1)/sqrt(pi) with Phi_a from its own product.
  const auto phi = genfun::phi_a(c.a, 1.0, kPhiCutoff, c.threads);
  const double b = kap.beta_a.to_double();
  const double lhs = landau.C.value * b * phi.value / std::sqrt(std::numbers::pi);
  const double gap = std::fabs(lhs - K_a);
  const double allowed = lhs * (std::expm1(landau.C.tail_bound) + std::expm1(phi.tail_bound)) +
                         K_a * std::expm1(K.tail_bound) + 1e-14;
  doc.field("identity_lhs", lhs);
  doc.field("identity_gap", gap);
  doc.field("identity_bound", allowed);
  doc.check("C beta(a) Phi_a(1)/sqrt(pi) = K(a)", gap <= allowed, "gap " + sci(gap) + ", bound " + sci(allowed));
  return doc;
}

Document run_kappa_table(const RunConfig&) {
  Document doc{"kappa-table", {}, {}, {}};
  Table table{"kappa",
              {{"a"}, {"label"}, {"kappa_computed"}, {"kappa_paper"}, {"abs_dev", true}, {"tolerance", true}},
              {}};
  for (const auto& entry : constants::published_kappa_table()) {
    const double computed = constants::kappa(entry.a).kappa;
    const std::string_view printed = entry.printed;
    double reference = 0.0;
    std::from_chars(printed.data(), printed.data() + printed.size(), reference);
    const double dev = std::fabs(computed - reference);
    table.rows.push_back({entry.a, std::string(entry.label), computed, reference, dev, entry.tolerance});
    doc.check("kappa(" + std::string(entry.label) + ")", dev <= entry.tolerance,
              "deviation " + sci(dev) + ", tolerance " + sci(entry.tolerance));
  }
  doc.tables.push_back(std::move(table));

  Table closed{"closed_forms", {{"p"}, {"m"}, {"kappa_closed"}, {"kappa_series"}, {"abs_dev", true}}, {}};
  for (std::uint64_t p : {2, 3, 5}) {
    std::uint64_t pm = 1;
    for (unsigned m = 1; m <= 4; ++m) {
      pm *= p;
      const double a = constants::kappa_closed(p, m);
      const double b = constants::kappa(pm).kappa;
      closed.rows.push_back({p, std::uint64_t{m}, a, b, std::fabs(a - b)});
      doc.check("closed form p=" + std::to_string(p) + " m=" + std::to_string(m), std::fabs(a - b) <= 1e-12,
                "deviation " + sci(std::fabs(a - b)));
    }
  }
  doc.tables.push_back(std::move(closed));
  return doc;
}

void add_verdict(Document& doc, const empirical::ConvergenceReport& r) {
  if (!r.verdict.applicable) return;
  doc.check(std::string(empirical::report_kind_name(r.kind)) + ": " + r.verdict.rule, r.verdict.passed,
            r.verdict.detail);
}

Document run_verify(const RunConfig& c) {
  Document doc{"verify", {}, {}, {}};
  const auto checkpoints = resolve_checkpoints(c, c.xmax);
  const auto opts = euler_options(c);
  const auto K = constants::big_K(c.prec, opts);
  const auto C = constants::landau_C(c.prec, opts);
  const auto result = empirical::verify(c.a, c.k, checkpoints, K, C, stream_options(c));

  doc.field("a", c.a);
  doc.field("k", std::uint64_t{c.k});
  if (c.k == 2) doc.field("K_a", constants::K_of_a(c.a, K));
  doc.field("Phi_a_1_over_sqrt_pi", genfun::phi_a_one_over_sqrt_pi(c.a, K, C));
  doc.field("C", C.value);

  Table table{"verify",
              {{"x"}, {"S"}, {"E"}, {"pred_S"}, {"pred_E"}, {"dev_theorem", true}, {"dev_E", true},
               {"R_lemma12", true}},
              {}};
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& t = result.theorem_ratio.rows[i];
    const auto& e = result.E_ratio.rows[i];
    Value R = std::monostate{};
    if (i < result.lemma12.rows.size()) R = report::optional_real(result.lemma12.rows[i].normalized_deviation);
    table.rows.push_back({t.x, t.raw_sum, e.raw_sum, report::optional_real(t.prediction),
                          report::optional_real(e.prediction), report::optional_real(t.normalized_deviation),
                          report::optional_real(e.normalized_deviation), R});
  }
  doc.tables.push_back(std::move(table));
  add_verdict(doc, result.theorem_ratio);
  add_verdict(doc, result.E_ratio);
  add_verdict(doc, result.lemma12);
  return doc;
}

Document run_phi_sum(const RunConfig& c) {
  Document doc{"phi-sum", {}, {}, {}};
  const std::uint64_t x = c.x.value_or(1'000'000);
  const auto checkpoints = resolve_checkpoints(c, x, 10);
  const auto landau = constants::C_and_prime_sums(c.prec, euler_options(c));
  const auto r = empirical::lemma10_report(c.m, checkpoints, landau.C, landau.L, stream_options(c));
  doc.field("m", c.m);
  doc.field("C", landau.C.value);
  doc.field("L", landau.L.value);
  doc.field("correction", constants::lemma10_correction(c.m));
  Table table{"phi_sum", {{"x"}, {"sum"}, {"prediction"}, {"deviation", true}}, {}};
  for (const auto& row : r.rows) {
    table.rows.push_back(
        {row.x, row.raw_sum, report::optional_real(row.prediction), report::optional_real(row.normalized_deviation)});
  }
  doc.tables.push_back(std::move(table));
  add_verdict(doc, r);
  return doc;
}

Document run_identity(const RunConfig& c) {
  Document doc{"identity", {}, {}, {}};
  const std::uint64_t N = c.x.value_or(1'000'000);
  const std::uint64_t P = c.pmax.value_or(100'000);
  const auto ev = genfun::identity_residual(c.a, c.s, N, P, c.threads);
  doc.field("a", c.a);
  doc.field("s", c.s);
  doc.field("N", N);
  doc.field("P", P);
  doc.field("lhs", ev.lhs);
  doc.field("rhs", ev.rhs);
  doc.field("residual", ev.residual);
  doc.field("lhs_tail_bound", ev.lhs_tail_bound);
  doc.field("rhs_tail_bound", ev.rhs_tail_bound);
  const double allowed = ev.lhs_tail_bound + ev.rhs_tail_bound + 1e-14 * ev.rhs;
  doc.check("residual within tail bounds", ev.residual <= allowed,
            "residual " + sci(ev.residual) + ", bound " + sci(allowed));
  return doc;
}

Document run_oracle(const RunConfig& c) {
  Document doc{"oracle", {}, {}, {}};
  const std::uint64_t x = c.x.value_or(1000);
  doc.field("a", c.a);
  doc.field("k", std::uint64_t{c.k});
  doc.field("x", x);

  const auto tau = arith::sieve_window(1, x, arith::TableKind::tau);
  std::uint64_t tau_mismatch = 0;
  for (std::uint64_t n = 1; n <= x; ++n) tau_mismatch += tau.counts()[n - 1] != empirical::naive::tau(n);
  doc.check("sieved tau = naive divisor count on [1, x]", tau_mismatch == 0,
            std::to_string(tau_mismatch) + " mismatches");

  if (c.k != 2) {
    // Brute force is quadratic, so the tau_k check stays small.
    const std::uint64_t y = std::min<std::uint64_t>(x, 10'000);
    const auto tk = arith::sieve_window(1, y, arith::TableKind::tau_k, c.k);
    std::uint64_t mismatch = 0;
    for (std::uint64_t n = 1; n <= y; ++n) {
      const std::uint64_t ref = c.k == 3 ? empirical::naive::tau3(n) : empirical::naive::tau_k(n, c.k);
      mismatch += tk.counts()[n - 1] != ref;
    }
    doc.check("sieved tau_k = brute force on [1, " + std::to_string(y) + "]", mismatch == 0,
              std::to_string(mismatch) + " mismatches");
  }

  const auto sieved = empirical::exact_sum_S_a(c.a, c.k, x);
  const auto naive = empirical::naive::sum_S_a(c.a, c.k, x);
  doc.field("S_exact", sieved.str());
  doc.field("S", sieved.to_double());
  doc.check("exact S_a: sieve = double loop", sieved == naive);

  const std::uint64_t points[] = {x};
  const auto streamed = empirical::stream_sums(c.a, c.k, points, true, stream_options(c)).front();
  const double stream_gap = std::fabs(streamed.S.value() - sieved.to_double());
  const double stream_bound = static_cast<double>(x) * 0x1p-63 + 4e-16 * sieved.to_double();
  doc.field("S_streamed", streamed.S.value());
  doc.check("streamed S_a matches exact sum", stream_gap <= stream_bound, "gap " + sci(stream_gap));

  // e_a through exact rationals grows expensive; a short prefix suffices.
  const std::uint64_t xe = std::min<std::uint64_t>(x, 2000);
  const auto e_sieve = empirical::exact_sum_E_a(c.a, xe);
  const auto e_naive = empirical::naive::sum_E_a(c.a, xe);
  doc.field("E_x", xe);
  doc.field("E", e_sieve.to_double());
  doc.check("exact E_a: local weights = defining sum", e_sieve == e_naive);

  const auto phi_sieve = empirical::exact_inv_phi(c.m, x);
  const auto phi_naive = empirical::naive::sum_inv_phi(c.m, x);
  doc.field("inv_phi", phi_sieve.to_double());
  doc.check("exact totient sum: sieve = trial division", phi_sieve == phi_naive);
  return doc;
}

Document run_smooth(const RunConfig& c) {
  Document doc{"smooth", {}, {}, {}};
  const std::uint64_t x = c.x.value_or(1'000'000);
  const auto seq = arith::smooth_sequence(c.d, static_cast<double>(x));
  doc.field("d", c.d);
  doc.field("s", std::uint64_t{seq.distinct_primes()});
  doc.field("bound", x);
  doc.field("D1", std::uint64_t{seq.d1()});
  doc.field("count_bound", seq.count_bound());
  doc.field("D2", arith::smooth_reciprocal_tail(c.d, static_cast<double>(x), static_cast<double>(x) * x));
  doc.field("D2_cutoff", static_cast<double>(x) * static_cast<double>(x));

  Table table{"lemma11", {{"x"}, {"D1"}, {"count_bound"}, {"ok"}}, {}};
  bool all = true;
  for (std::uint64_t y = 10; y <= x; y *= 10) {
    const auto part = arith::smooth_sequence(c.d, static_cast<double>(y));
    const bool ok = static_cast<double>(part.d1()) <= part.count_bound();
    all = all && ok;
    table.rows.push_back({y, std::uint64_t{part.d1()}, part.count_bound(), ok});
  }
  doc.tables.push_back(std::move(table));
  doc.check("D1(x) <= (8 ln x)^s at every decade", all);

  if (x <= 1'000'000) {
    std::vector<std::uint64_t> brute;
    for (std::uint64_t n = 1; n <= x; ++n) {
      std::uint64_t r = n;
      for (auto p : seq.primes) {
        while (r % p == 0) r /= p;
      }
      if (r == 1) brute.push_back(n);
    }
    doc.check("enumeration = brute-force filter", brute == seq.elements,
              std::to_string(brute.size()) + " vs " + std::to_string(seq.elements.size()));
  }
  return doc;
}

}  // namespace

report::Document run(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::constants:
      return run_constants(config);
    case Command::kappa_table:
      return run_kappa_table(config);
    case Command::verify:
      return run_verify(config);
    case Command::phi_sum:
      return run_phi_sum(config);
    case Command::identity:
      return run_identity(config);
    case Command::oracle:
      return run_oracle(config);
    case Command::smooth:
      return run_smooth(config);
  }
  throw ConfigError("unknown command");
}

}  // namespace tauratio::app
