/* C interface to the tau-ratio library. All functions are reentrant; error
 * messages are kept per thread and read back with tr_last_error(). */
#ifndef TAURATIO_TAURATIO_H
#define TAURATIO_TAURATIO_H

#include <stddef.h>
#include <stdint.h>

#if defined(TAURATIO_BUILDING_LIBRARY)
#define TAURATIO_API __attribute__((visibility("default")))
#else
#define TAURATIO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tr_status {
  TR_OK = 0,
  TR_ERR_DOMAIN = 1,    /* argument outside the mathematical domain */
  TR_ERR_OVERFLOW = 2,  /* result does not fit the result type */
  TR_ERR_BUDGET = 3,    /* memory or prime budget exceeded */
  TR_ERR_CONFIG = 4,    /* invalid run configuration or option */
  TR_ERR_NULL = 5,      /* required pointer argument was NULL */
  TR_ERR_BUFFER = 6,    /* caller buffer too small */
  TR_ERR_INTERNAL = 7
} tr_status;

TAURATIO_API const char* tr_version(void);
TAURATIO_API const char* tr_status_name(tr_status status);
/* Message of the last failing call on this thread ("" if none). */
TAURATIO_API const char* tr_last_error(void);
/* For TR_ERR_BUDGET from the Euler products: the best reachable tail bound. */
TAURATIO_API double tr_last_best_bound(void);

/* ---- arithmetic ---- */

/* Writes up to `capacity` (prime, exponent) pairs; *count receives the
 * number of distinct primes. TR_ERR_BUFFER if capacity is too small. */
TAURATIO_API tr_status tr_factorize(uint64_t n, uint64_t* primes, uint32_t* exponents, size_t capacity,
                                    size_t* count);
TAURATIO_API tr_status tr_tau(uint64_t n, uint32_t k, uint64_t* out);
TAURATIO_API tr_status tr_totient_mu(uint64_t n, uint64_t* phi, int* mu);

typedef enum tr_table_kind { TR_TABLE_TAU = 0, TR_TABLE_TAU_K = 1, TR_TABLE_PHI = 2, TR_TABLE_MU = 3 } tr_table_kind;

typedef struct tr_table tr_table;
TAURATIO_API tr_status tr_table_sieve(uint64_t lo, uint64_t hi, tr_table_kind kind, uint32_t k, tr_table** out);
TAURATIO_API size_t tr_table_size(const tr_table* table);
TAURATIO_API tr_status tr_table_at(const tr_table* table, uint64_t n, int64_t* value);
TAURATIO_API void tr_table_destroy(tr_table* table);

typedef struct tr_smooth tr_smooth;
TAURATIO_API tr_status tr_smooth_create(uint64_t d, double bound, tr_smooth** out);
TAURATIO_API size_t tr_smooth_count(const tr_smooth* seq);
TAURATIO_API const uint64_t* tr_smooth_elements(const tr_smooth* seq);
TAURATIO_API size_t tr_smooth_distinct_primes(const tr_smooth* seq);
TAURATIO_API double tr_smooth_count_bound(const tr_smooth* seq);
TAURATIO_API void tr_smooth_destroy(tr_smooth* seq);
TAURATIO_API tr_status tr_smooth_reciprocal_tail(uint64_t d, double bound, double cutoff, double* out);

/* ---- constants ---- */

/* Exact rationals are written as "num/den" (or "num" when integral). */
TAURATIO_API tr_status tr_beta(uint64_t a, char* buffer, size_t capacity);
TAURATIO_API tr_status tr_e_a(uint64_t a, uint64_t n, char* buffer, size_t capacity);
TAURATIO_API tr_status tr_e_a_prime_power(uint64_t a, uint64_t p, uint32_t k, char* buffer, size_t capacity);

TAURATIO_API tr_status tr_kappa(uint64_t a, double* out);
TAURATIO_API tr_status tr_kappa_closed(uint64_t p, unsigned m, double* out);

typedef struct tr_euler_result {
  double value;
  uint64_t cutoff;
  double tail_bound; /* bound on |log(true) - log(value)| (on |true - value| for L) */
  uint64_t factor_count;
} tr_euler_result;

TAURATIO_API tr_status tr_big_K(double target_tail, unsigned threads, tr_euler_result* out);
TAURATIO_API tr_status tr_big_K_at_cutoff(uint64_t cutoff, unsigned threads, tr_euler_result* out);
TAURATIO_API tr_status tr_C_and_prime_sums(double target_tail, unsigned threads, tr_euler_result* C,
                                           tr_euler_result* L);
TAURATIO_API tr_status tr_K_of_a(uint64_t a, double target_tail, unsigned threads, double* out);
TAURATIO_API tr_status tr_lemma10_prediction(uint64_t m, double x, const tr_euler_result* C,
                                             const tr_euler_result* L, double* out);

/* ---- generating functions ---- */

TAURATIO_API tr_status tr_F_a_truncated(uint64_t a, double s, uint64_t N, double* out);
TAURATIO_API tr_status tr_phi_a(uint64_t a, double s, uint64_t P, unsigned threads, double* value,
                                double* tail_bound);

typedef struct tr_series_evaluation {
  uint64_t a;
  double s;
  uint64_t N;
  uint64_t P;
  double lhs;
  double rhs;
  double residual;
  double lhs_tail_bound;
  double rhs_tail_bound;
} tr_series_evaluation;

TAURATIO_API tr_status tr_identity_residual(uint64_t a, double s, uint64_t N, uint64_t P, unsigned threads,
                                            tr_series_evaluation* out);
TAURATIO_API tr_status tr_E_prediction(uint64_t a, double x, const tr_euler_result* K, const tr_euler_result* C,
                                       double* out);

/* ---- empirical sums ---- */

TAURATIO_API tr_status tr_sum_S_a(uint64_t a, uint32_t k, uint64_t x, unsigned threads, double* out);
TAURATIO_API tr_status tr_sum_E_a(uint64_t a, uint64_t x, unsigned threads, double* out);
TAURATIO_API tr_status tr_sum_inv_phi_coprime(uint64_t m, uint64_t x, unsigned threads, double* out);

/* ---- command runs ---- */

typedef struct tr_config tr_config;
typedef struct tr_report tr_report;

/* command: constants, kappa-table, verify, phi-sum, identity, oracle, smooth */
TAURATIO_API tr_status tr_config_create(const char* command, tr_config** out);
/* key is an option name without dashes ("a", "xmax", "checkpoints", ...). */
TAURATIO_API tr_status tr_config_set(tr_config* config, const char* key, const char* value);
TAURATIO_API void tr_config_destroy(tr_config* config);

TAURATIO_API tr_status tr_run(const tr_config* config, tr_report** out);
/* Rendered output in the configured format; owned by the report. */
TAURATIO_API tr_status tr_report_text(const tr_report* report, const char** text, size_t* length);
TAURATIO_API int tr_report_passed(const tr_report* report);
TAURATIO_API size_t tr_report_assertion_count(const tr_report* report);
TAURATIO_API tr_status tr_report_assertion(const tr_report* report, size_t index, const char** name, int* passed,
                                           const char** detail);
TAURATIO_API void tr_report_destroy(tr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TAURATIO_TAURATIO_H */
