/*
 * ellsum — numerical verification library for a BC_n elliptic summation
 * formula and the identities behind its proof (theta kernels, fundamental
 * W_n invariants, Jackson-integral two-term relations, contiguity
 * recursion).
 *
 * C API over the C++ core: opaque handles, status codes, complex numbers as
 * re/im pairs. All functions are thread-safe; handles must not be shared
 * between threads without external synchronization.
 */
#ifndef ELLSUM_H
#define ELLSUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ellsum_status {
  ELLSUM_OK = 0,
  ELLSUM_ERROR_DOMAIN = 1,      /* input outside the mathematical domain */
  ELLSUM_ERROR_TRUNCATION = 2,  /* product term cap exceeded */
  ELLSUM_ERROR_NEAR_POLE = 3,   /* denominator theta below the pole guard */
  ELLSUM_ERROR_GENERICITY = 4,  /* parameter draw fails the genericity guards */
  ELLSUM_ERROR_RANGE = 5,       /* index out of range */
  ELLSUM_ERROR_OBSERVABLE = 6,  /* integrand non-finite at a lattice point */
  ELLSUM_ERROR_CONFIG = 7,      /* malformed suite configuration */
  ELLSUM_ERROR_INTERNAL = 8
} ellsum_status;

typedef struct ellsum_complex {
  double re;
  double im;
} ellsum_complex;

/* Static name of a status code. */
const char* ellsum_status_name(ellsum_status status);

/* Detail message of the most recent failure on the calling thread. */
const char* ellsum_last_error(void);

/* ------------------------------------------------------------ kernel --- */

/* Truncation target for infinite products; pass 0 for the default 1e-14. */
ellsum_status ellsum_qpochhammer(ellsum_complex z, ellsum_complex p,
                                 double eps_trunc, ellsum_complex* out);

ellsum_status ellsum_theta(ellsum_complex z, ellsum_complex p, double eps_trunc,
                           ellsum_complex* out);

/* theta(z;p;q)_k, integer k of either sign. */
ellsum_status ellsum_theta_factorial(ellsum_complex z, long k, ellsum_complex p,
                                     ellsum_complex q, double eps_trunc,
                                     ellsum_complex* out);

ellsum_status ellsum_elliptic_gamma(ellsum_complex z, ellsum_complex p,
                                    ellsum_complex q, double eps_trunc,
                                    ellsum_complex* out);

/* ---------------------------------------------------- parameter sets --- */

typedef enum ellsum_balancing {
  ELLSUM_BALANCE_SUM_Q = 0,  /* a_1..a_6 t^{2n-2} = q */
  ELLSUM_BALANCE_INV_ONE = 1,/* a_1..a_6 t^{2n-2} = 1 */
  ELLSUM_BALANCE_NONE = 2    /* a_5, a_6 supplied; only truncation enforced */
} ellsum_balancing;

typedef struct ellsum_params ellsum_params;

/*
 * Solves the truncation condition a_1 a_6 t^{n-1} = q^{-N} for a_6 and the
 * requested balancing for a_5. `a` supplies a_1..a_4 (na = 4) in the solved
 * modes, or a_1..a_6 (na = 6) with ELLSUM_BALANCE_NONE.
 */
ellsum_status ellsum_params_solve(const ellsum_complex* a, size_t na,
                                  ellsum_complex t, ellsum_complex p,
                                  ellsum_complex q, int n, int N,
                                  ellsum_balancing mode, ellsum_params** out);

void ellsum_params_free(ellsum_params* params);

/* m ranges 1..6. */
ellsum_status ellsum_params_get_a(const ellsum_params* params, int m,
                                  ellsum_complex* out);

/* --------------------------------------------------- identity values --- */

ellsum_status ellsum_lhs_sum(const ellsum_params* params, double eps_trunc,
                             ellsum_complex* out);

ellsum_status ellsum_rhs_product(const ellsum_params* params, double eps_trunc,
                                 ellsum_complex* out);

/* Number of lattice points C(N+n, n) of the truncated simplex. */
ellsum_status ellsum_simplex_count(int n, int N, uint64_t* out);

/* ------------------------------------------------------------- suite --- */

typedef struct ellsum_suite_config ellsum_suite_config;
typedef struct ellsum_report ellsum_report;

/* Defaults: mode=all, n=1,2,3, N=0..4, draws=20, seed=42, format=json,
 * deterministic summation on. */
ellsum_suite_config* ellsum_config_new(void);
void ellsum_config_free(ellsum_suite_config* config);

ellsum_status ellsum_config_set_mode(ellsum_suite_config* config, const char* mode);
ellsum_status ellsum_config_set_n_values(ellsum_suite_config* config,
                                         const int* values, size_t count);
ellsum_status ellsum_config_set_N_values(ellsum_suite_config* config,
                                         const int* values, size_t count);
ellsum_status ellsum_config_set_draws(ellsum_suite_config* config, int draws);
ellsum_status ellsum_config_set_seed(ellsum_suite_config* config, uint64_t seed);
ellsum_status ellsum_config_set_tolerance(ellsum_suite_config* config,
                                          const char* check, double tol);
ellsum_status ellsum_config_set_eps_trunc(ellsum_suite_config* config, double eps);
ellsum_status ellsum_config_set_format(ellsum_suite_config* config, const char* format);
ellsum_status ellsum_config_set_deterministic_sum(ellsum_suite_config* config,
                                                  int enabled);

/* Runs the configured verification suite. Worker count is capped by the
 * ELLSUM_THREADS environment variable; reports are byte-identical for
 * identical configs regardless of it. */
ellsum_status ellsum_run_suite(const ellsum_suite_config* config,
                               ellsum_report** out);

void ellsum_report_free(ellsum_report* report);

size_t ellsum_report_total(const ellsum_report* report);
size_t ellsum_report_passed(const ellsum_report* report);
size_t ellsum_report_failed(const ellsum_report* report);
size_t ellsum_report_skipped(const ellsum_report* report);
double ellsum_report_max_residual(const ellsum_report* report);
/* Total measured check time; not part of the serialized report. */
double ellsum_report_wall_ms(const ellsum_report* report);

/* Serializes in the config's format ("json"/"csv"; pass NULL for the
 * configured one). The returned buffer is malloc'd; release it with
 * ellsum_string_free. */
ellsum_status ellsum_report_render(const ellsum_report* report, const char* format,
                                   char** out);

void ellsum_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* ELLSUM_H */
