/* corrsieve: multiplicative-function sieving, Dirichlet convolution and
 * correlation/discrepancy experiments behind a plain C interface.
 *
 * All functions return a cs_status; results come back through out
 * parameters. Handles are opaque and must be released with the matching
 * _free call. Handles are immutable after creation and safe to share
 * across threads.
 */
#ifndef CORRSIEVE_H
#define CORRSIEVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_EINVAL = 1,    /* precondition violated */
  CS_ENOMEM = 2,    /* allocation failure or limit beyond table range */
  CS_EINTERNAL = 3, /* unexpected failure */
} cs_status;

/* Message for the most recent non-OK status on this thread. */
const char* cs_last_error(void);

/* Worker threads used by table builds and range folds. Results are
 * byte-identical for any setting. */
void cs_set_thread_count(int n);
int cs_thread_count(void);

typedef struct cs_sieve cs_sieve;
typedef struct cs_seq cs_seq;

/* ---- smallest-prime-factor table -------------------------------------- */

cs_status cs_sieve_build(uint64_t limit, cs_sieve** out);
void cs_sieve_free(cs_sieve* t);
uint64_t cs_sieve_limit(const cs_sieve* t);
cs_status cs_sieve_prime_count(const cs_sieve* t, uint64_t* out);
cs_status cs_sieve_spf(const cs_sieve* t, uint64_t n, uint32_t* out);

typedef enum cs_classical_fn {
  CS_FN_MOBIUS = 0,
  CS_FN_LIOUVILLE = 1,
  CS_FN_OMEGA = 2,
  CS_FN_BIG_OMEGA = 3,
  CS_FN_VON_MANGOLDT = 4,
  CS_FN_IS_SQUAREFREE = 5,
} cs_classical_fn;

cs_status cs_classical(const cs_sieve* t, cs_classical_fn f, uint64_t n,
                       double* out);
cs_status cs_omega_split(const cs_sieve* t, uint64_t n, double y,
                         uint32_t* below, uint32_t* at_or_above);

/* ---- divisor-type weights --------------------------------------------- */

cs_status cs_tau_r(const cs_sieve* t, uint64_t n, double r, double* out);
cs_status cs_tau_pm(const cs_sieve* t, uint64_t n, double kappa1,
                    double kappa2, double y, double* out);
cs_status cs_alpha_weight(const cs_sieve* t, uint64_t n, double kappa,
                          uint64_t scale_N, double* out);
cs_status cs_alpha_closed_squarefree(const cs_sieve* t, uint64_t n,
                                     double kappa, uint64_t scale_N,
                                     double* out);
cs_status cs_check_leibnitz(const cs_sieve* t, double kappa, uint64_t limit,
                            double* max_deviation);
cs_status cs_alpha_identity_check(const cs_sieve* t, double kappa,
                                  uint64_t limit, uint64_t scale_N,
                                  double* max_deviation);

/* ---- finitely supported sequences ------------------------------------- */

cs_status cs_seq_create(uint64_t limit, const double* values_1_based,
                        cs_seq** out); /* values may be NULL for zeros */
cs_status cs_seq_delta(uint64_t limit, uint64_t at, cs_seq** out);
cs_status cs_seq_ones(uint64_t limit, cs_seq** out);
cs_status cs_seq_classical(const cs_sieve* t, cs_classical_fn f,
                           uint64_t limit, cs_seq** out);
/* tau_2(n) log n on (scale/2, scale], zero elsewhere. */
cs_status cs_seq_coefficient_preset(const cs_sieve* t, uint64_t scale,
                                    uint64_t limit, cs_seq** out);
void cs_seq_free(cs_seq* s);
uint64_t cs_seq_limit(const cs_seq* s);
cs_status cs_seq_get(const cs_seq* s, uint64_t n, double* out);
cs_status cs_dirichlet_convolve(const cs_seq* a, const cs_seq* b,
                                uint64_t limit, cs_seq** out);
cs_status cs_log_multiply(const cs_seq* a, cs_seq** out);

/* ---- correlation and discrepancy sums --------------------------------- */

cs_status cs_is_admissible_pair(int64_t h1, int64_t h2, int* out);

typedef struct cs_report {
  uint64_t lo, hi;
  double weighted_sum;
  double normalizer_sum;
  double ratio;
  int ratio_defined;
} cs_report;

cs_status cs_single_correlation(const cs_sieve* t, double kappa, uint64_t N,
                                cs_report* out);
cs_status cs_two_point_log_avg(const cs_sieve* t, int64_t h1, int64_t h2,
                               double kappa, uint64_t N, double h_of_N,
                               cs_report* out);

typedef enum cs_weight_kind {
  CS_WEIGHT_ALPHA_KAPPA = 0,
  CS_WEIGHT_TAU_PM = 1,
} cs_weight_kind;

typedef struct cs_weight_spec {
  cs_weight_kind kind;
  double kappa;          /* alpha_kappa */
  double kappa1, kappa2; /* tau_pm, 0 <= kappa1 < kappa2 */
  double y;
} cs_weight_spec;

cs_status cs_two_point_plain(const cs_sieve* t, int64_t h1, int64_t h2,
                             const cs_weight_spec* w, uint64_t N,
                             cs_report* out);
cs_status cs_chowla_raw(const cs_sieve* t, int64_t h1, int64_t h2, uint64_t N,
                        double* out);

cs_status cs_discrepancy(const cs_seq* a, uint64_t q, uint64_t residue,
                         double* out);
/* per_q (length D, entry q-1 = sup over primitive classes) may be NULL. */
cs_status cs_geh_aggregate(const cs_seq* a, const cs_seq* b, uint64_t D,
                           uint64_t limit, double* per_q, double* total);

/* ---- distribution experiments ----------------------------------------- */

typedef struct cs_rough_stats {
  uint64_t x;
  double y;
  uint64_t count;
  double u;
} cs_rough_stats;

/* histogram[i] receives the count of members with omega = i; pass NULL or
 * histogram_len 0 to skip. */
cs_status cs_rough_stats_compute(const cs_sieve* t, uint64_t x, double y,
                                 cs_rough_stats* out, uint64_t* histogram,
                                 size_t histogram_len);
cs_status cs_alladi_distance(const cs_sieve* t, uint64_t x, double y,
                             double* out);
cs_status cs_euler_f(const cs_sieve* t, double z, uint64_t prime_limit,
                     double* value, double* tail_bound);

typedef struct cs_fit {
  double observed;
  double predicted;
  double ratio;
  int ratio_defined;
  double extra;  /* tail bound or fit residual */
  double c_fit;  /* fitted constant (cs_mean_tau only) */
} cs_fit;

cs_status cs_selberg_pi_k(const cs_sieve* t, uint64_t x, uint32_t k,
                          cs_fit* out);
cs_status cs_mean_tau(const cs_sieve* t, uint64_t x, double kappa,
                      cs_fit* out);

#ifdef __cplusplus
}
#endif

#endif /* CORRSIEVE_H */
