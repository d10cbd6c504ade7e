#include "tauratio/tauratio.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "arith/divisor_table.hpp"
#include "arith/factorization.hpp"
#include "arith/smooth.hpp"
#include "common/errors.hpp"
#include "constants/euler.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "empirical/reports.hpp"
#include "empirical/streaming.hpp"
#include "genfun/dirichlet.hpp"
#include "report/document.hpp"

struct tr_table {
  tauratio::arith::DivisorTable table;
};

struct tr_smooth {
  tauratio::arith::SmoothSequence seq;
};

struct tr_config {
  tauratio::app::RunConfig config;
};

struct tr_report {
  tauratio::report::Document doc;
  std::string text;
};

namespace {

thread_local std::string last_error;
thread_local double last_best_bound = 0.0;

tr_status fail(tr_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs fn and maps exceptions onto status codes.
template <class Fn>
tr_status guard(Fn&& fn) {
  last_error.clear();
  last_best_bound = 0.0;
  try {
    fn();
    return TR_OK;
  } catch (const tauratio::DomainError& e) {
    return fail(TR_ERR_DOMAIN, e.what());
  } catch (const tauratio::OverflowError& e) {
    return fail(TR_ERR_OVERFLOW, e.what());
  } catch (const tauratio::BudgetError& e) {
    last_best_bound = e.best_bound();
    return fail(TR_ERR_BUDGET, e.what());
  } catch (const tauratio::ConfigError& e) {
    return fail(TR_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TR_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(TR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TR_ERR_INTERNAL, "unknown error");
  }
}

#define TR_REQUIRE(ptr)                                             \
  do {                                                              \
    if (!(ptr)) return fail(TR_ERR_NULL, #ptr " must not be NULL"); \
  } while (0)

tr_status copy_out(const std::string& s, char* buffer, size_t capacity) {
  if (s.size() + 1 > capacity) return fail(TR_ERR_BUFFER, "buffer too small");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return TR_OK;
}


tr_euler_result to_c(const tauratio::constants::EulerProductResult& r) {
  return {r.value, r.cutoff, r.tail_bound, r.factor_count};
}

tauratio::constants::EulerProductResult from_c(const tr_euler_result& r) {
  return {r.value, r.cutoff, r.tail_bound, r.factor_count};
}

tauratio::constants::EulerOptions euler(unsigned threads) {
  tauratio::constants::EulerOptions o;
  o.threads = threads == 0 ? 1 : threads;
  return o;
}

tauratio::empirical::StreamOptions stream(unsigned threads) {
  tauratio::empirical::StreamOptions o;
  o.threads = threads == 0 ? 1 : threads;
  o.limit = tauratio::app::kMaxX;
  return o;
}

}  // namespace

extern "C" {

const char* tr_version(void) { return "1.0.0"; }

const char* tr_status_name(tr_status status) {
  switch (status) {
    case TR_OK:
      return "ok";
    case TR_ERR_DOMAIN:
      return "domain error";
    case TR_ERR_OVERFLOW:
      return "overflow";
    case TR_ERR_BUDGET:
      return "budget exceeded";
    case TR_ERR_CONFIG:
      return "configuration error";
    case TR_ERR_NULL:
      return "null argument";
    case TR_ERR_BUFFER:
      return "buffer too small";
    case TR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* tr_last_error(void) { return last_error.c_str(); }
double tr_last_best_bound(void) { return last_best_bound; }

tr_status tr_factorize(uint64_t n, uint64_t* primes, uint32_t* exponents, size_t capacity, size_t* count) {
  TR_REQUIRE(count);
  tauratio::arith::Factorization f;
  const tr_status st = guard([&] { f = tauratio::arith::factorize(n); });
  if (st != TR_OK) return st;
  *count = f.size();
  if (f.size() > capacity) return fail(TR_ERR_BUFFER, "capacity below the number of distinct primes");
  if (f.size() > 0) {
    TR_REQUIRE(primes);
    TR_REQUIRE(exponents);
  }
  for (size_t i = 0; i < f.size(); ++i) {
    primes[i] = f.pairs()[i].prime;
    exponents[i] = f.pairs()[i].exponent;
  }
  return TR_OK;
}

tr_status tr_tau(uint64_t n, uint32_t k, uint64_t* out) {
  TR_REQUIRE(out);
  return guard([&] {
    if (k < 2) throw tauratio::DomainError("tau: k must be >= 2");
    *out = tauratio::arith::tau(tauratio::arith::factorize(n), k);
  });
}

tr_status tr_totient_mu(uint64_t n, uint64_t* phi, int* mu) {
  TR_REQUIRE(phi);
  TR_REQUIRE(mu);
  return guard([&] {
    const auto r = tauratio::arith::totient_mu(tauratio::arith::factorize(n));
    *phi = r.phi;
    *mu = r.mu;
  });
}

tr_status tr_table_sieve(uint64_t lo, uint64_t hi, tr_table_kind kind, uint32_t k, tr_table** out) {
  TR_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    tauratio::arith::TableKind tk;
    switch (kind) {
      case TR_TABLE_TAU:
        tk = tauratio::arith::TableKind::tau;
        break;
      case TR_TABLE_TAU_K:
        tk = tauratio::arith::TableKind::tau_k;
        break;
      case TR_TABLE_PHI:
        tk = tauratio::arith::TableKind::phi;
        break;
      case TR_TABLE_MU:
        tk = tauratio::arith::TableKind::mu;
        break;
      default:
        throw tauratio::DomainError("unknown table kind");
    }
    *out = new tr_table{tauratio::arith::sieve_window(lo, hi, tk, k)};
  });
}

size_t tr_table_size(const tr_table* table) { return table ? table->table.size() : 0; }

tr_status tr_table_at(const tr_table* table, uint64_t n, int64_t* value) {
  TR_REQUIRE(table);
  TR_REQUIRE(value);
  return guard([&] { *value = table->table.at(n); });
}

void tr_table_destroy(tr_table* table) { delete table; }

tr_status tr_smooth_create(uint64_t d, double bound, tr_smooth** out) {
  TR_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new tr_smooth{tauratio::arith::smooth_sequence(d, bound)}; });
}

size_t tr_smooth_count(const tr_smooth* seq) { return seq ? seq->seq.d1() : 0; }
const uint64_t* tr_smooth_elements(const tr_smooth* seq) { return seq ? seq->seq.elements.data() : nullptr; }
size_t tr_smooth_distinct_primes(const tr_smooth* seq) { return seq ? seq->seq.distinct_primes() : 0; }

double tr_smooth_count_bound(const tr_smooth* seq) {
  double v = 0.0;
  if (seq) guard([&] { v = seq->seq.count_bound(); });
  return v;
}

void tr_smooth_destroy(tr_smooth* seq) { delete seq; }

tr_status tr_smooth_reciprocal_tail(uint64_t d, double bound, double cutoff, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::arith::smooth_reciprocal_tail(d, bound, cutoff); });
}

tr_status tr_beta(uint64_t a, char* buffer, size_t capacity) {
  TR_REQUIRE(buffer);
  std::string s;
  const tr_status st = guard([&] { s = tauratio::constants::beta(a).str(); });
  return st == TR_OK ? copy_out(s, buffer, capacity) : st;
}

tr_status tr_e_a(uint64_t a, uint64_t n, char* buffer, size_t capacity) {
  TR_REQUIRE(buffer);
  std::string s;
  const tr_status st = guard([&] { s = tauratio::constants::e_a(a, n).str(); });
  return st == TR_OK ? copy_out(s, buffer, capacity) : st;
}

tr_status tr_e_a_prime_power(uint64_t a, uint64_t p, uint32_t k, char* buffer, size_t capacity) {
  TR_REQUIRE(buffer);
  std::string s;
  const tr_status st = guard([&] { s = tauratio::constants::e_a_prime_power(a, p, k).str(); });
  return st == TR_OK ? copy_out(s, buffer, capacity) : st;
}

tr_status tr_kappa(uint64_t a, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::constants::kappa(a).kappa; });
}

tr_status tr_kappa_closed(uint64_t p, unsigned m, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::constants::kappa_closed(p, m); });
}

tr_status tr_big_K(double target_tail, unsigned threads, tr_euler_result* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = to_c(tauratio::constants::big_K(target_tail, euler(threads))); });
}

tr_status tr_big_K_at_cutoff(uint64_t cutoff, unsigned threads, tr_euler_result* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = to_c(tauratio::constants::big_K_at_cutoff(cutoff, euler(threads))); });
}

tr_status tr_C_and_prime_sums(double target_tail, unsigned threads, tr_euler_result* C, tr_euler_result* L) {
  TR_REQUIRE(C);
  TR_REQUIRE(L);
  return guard([&] {
    const auto r = tauratio::constants::C_and_prime_sums(target_tail, euler(threads));
    *C = to_c(r.C);
    *L = to_c(r.L);
  });
}

tr_status tr_K_of_a(uint64_t a, double target_tail, unsigned threads, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::constants::K_of_a(a, target_tail, euler(threads)); });
}

tr_status tr_lemma10_prediction(uint64_t m, double x, const tr_euler_result* C, const tr_euler_result* L,
                                double* out) {
  TR_REQUIRE(C);
  TR_REQUIRE(L);
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::constants::lemma10_prediction(m, x, from_c(*C), from_c(*L)); });
}

tr_status tr_F_a_truncated(uint64_t a, double s, uint64_t N, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::genfun::F_a_truncated(a, s, N); });
}

tr_status tr_phi_a(uint64_t a, double s, uint64_t P, unsigned threads, double* value, double* tail_bound) {
  TR_REQUIRE(value);
  return guard([&] {
    const auto r = tauratio::genfun::phi_a(a, s, P, threads == 0 ? 1 : threads);
    *value = r.value;
    if (tail_bound) *tail_bound = r.tail_bound;
  });
}

tr_status tr_identity_residual(uint64_t a, double s, uint64_t N, uint64_t P, unsigned threads,
                               tr_series_evaluation* out) {
  TR_REQUIRE(out);
  return guard([&] {
    const auto r = tauratio::genfun::identity_residual(a, s, N, P, threads == 0 ? 1 : threads);
    *out = {r.a, r.s, r.N, r.P, r.lhs, r.rhs, r.residual, r.lhs_tail_bound, r.rhs_tail_bound};
  });
}

tr_status tr_E_prediction(uint64_t a, double x, const tr_euler_result* K, const tr_euler_result* C, double* out) {
  TR_REQUIRE(K);
  TR_REQUIRE(C);
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::genfun::E_prediction(a, x, from_c(*K), from_c(*C)); });
}

tr_status tr_sum_S_a(uint64_t a, uint32_t k, uint64_t x, unsigned threads, double* out) {
  TR_REQUIRE(out);
  return guard([&] {
    const uint64_t points[] = {x};
    *out = tauratio::empirical::stream_sums(a, k, points, false, stream(threads)).front().S.value();
  });
}

tr_status tr_sum_E_a(uint64_t a, uint64_t x, unsigned threads, double* out) {
  TR_REQUIRE(out);
  return guard([&] {
    const uint64_t points[] = {x};
    *out = tauratio::empirical::stream_sums(a, 2, points, true, stream(threads)).front().E.value();
  });
}

tr_status tr_sum_inv_phi_coprime(uint64_t m, uint64_t x, unsigned threads, double* out) {
  TR_REQUIRE(out);
  return guard([&] { *out = tauratio::empirical::sum_inv_phi_coprime(m, x, stream(threads)); });
}

tr_status tr_config_create(const char* command, tr_config** out) {
  TR_REQUIRE(command);
  TR_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    const auto c = tauratio::app::parse_command(command);
    if (!c) throw tauratio::ConfigError(std::string("unknown subcommand '") + command + "'");
    auto config = std::make_unique<tr_config>();
    config->config.command = *c;
    *out = config.release();
  });
}

tr_status tr_config_set(tr_config* config, const char* key, const char* value) {
  TR_REQUIRE(config);
  TR_REQUIRE(key);
  TR_REQUIRE(value);
  return guard([&] { tauratio::app::set_option(config->config, key, value); });
}

void tr_config_destroy(tr_config* config) { delete config; }

tr_status tr_run(const tr_config* config, tr_report** out) {
  TR_REQUIRE(config);
  TR_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    auto report = std::make_unique<tr_report>();
    report->doc = tauratio::app::run(config->config);
    report->text = tauratio::report::render(report->doc, tauratio::app::effective_format(config->config));
    *out = report.release();
  });
}

tr_status tr_report_text(const tr_report* report, const char** text, size_t* length) {
  TR_REQUIRE(report);
  TR_REQUIRE(text);
  *text = report->text.c_str();
  if (length) *length = report->text.size();
  return TR_OK;
}

int tr_report_passed(const tr_report* report) { return report && report->doc.passed() ? 1 : 0; }

size_t tr_report_assertion_count(const tr_report* report) { return report ? report->doc.assertions.size() : 0; }

tr_status tr_report_assertion(const tr_report* report, size_t index, const char** name, int* passed,
                              const char** detail) {
  TR_REQUIRE(report);
  if (index >= report->doc.assertions.size()) return fail(TR_ERR_DOMAIN, "assertion index out of range");
  const auto& a = report->doc.assertions[index];
  if (name) *name = a.name.c_str();
  if (passed) *passed = a.passed ? 1 : 0;
  if (detail) *detail = a.detail.c_str();
  return TR_OK;
}

void tr_report_destroy(tr_report* report) { delete report; }

}  // extern "C"
