#include "corrsieve.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "corrsieve/arith.hpp"
#include "corrsieve/correlation.hpp"
#include "corrsieve/distribution.hpp"
#include "corrsieve/sieve.hpp"
#include "corrsieve/util.hpp"
#include "corrsieve/weights.hpp"

using namespace corrsieve;

struct cs_sieve {
  SpfTable table;
};

struct cs_seq {
  ArithSeq seq;
};

namespace {

thread_local std::string g_last_error;

cs_status fail(cs_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

template <class Fn>
cs_status guarded(Fn&& fn) {
  try {
    fn();
    return CS_OK;
  } catch (const std::invalid_argument& e) {
    return fail(CS_EINVAL, e.what());
  } catch (const std::length_error& e) {
    return fail(CS_ENOMEM, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CS_ENOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(CS_EINTERNAL, e.what());
  }
}

ClassicalFn to_fn(cs_classical_fn f) {
  switch (f) {
    case CS_FN_MOBIUS: return ClassicalFn::mobius;
    case CS_FN_LIOUVILLE: return ClassicalFn::liouville;
    case CS_FN_OMEGA: return ClassicalFn::omega;
    case CS_FN_BIG_OMEGA: return ClassicalFn::big_omega;
    case CS_FN_VON_MANGOLDT: return ClassicalFn::von_mangoldt;
    case CS_FN_IS_SQUAREFREE: return ClassicalFn::is_squarefree;
  }
  throw std::invalid_argument("unknown classical function id");
}

void fill_report(const CorrelationReport& r, cs_report* out) {
  out->lo = r.lo;
  out->hi = r.hi;
  out->weighted_sum = r.weighted_sum;
  out->normalizer_sum = r.normalizer_sum;
  out->ratio = r.ratio;
  out->ratio_defined = r.ratio_defined ? 1 : 0;
}

void fill_fit(const AsymptoticFit& f, cs_fit* out) {
  out->observed = f.observed;
  out->predicted = f.predicted;
  out->ratio = f.ratio;
  out->ratio_defined = f.ratio_defined ? 1 : 0;
  out->extra = f.extra;
  out->c_fit = f.c_fit;
}

}  // namespace

extern "C" {

const char* cs_last_error(void) { return g_last_error.c_str(); }

void cs_set_thread_count(int n) { set_thread_count(n); }
int cs_thread_count(void) { return thread_count(); }

cs_status cs_sieve_build(uint64_t limit, cs_sieve** out) {
  return guarded([&] { *out = new cs_sieve{SpfTable(limit)}; });
}

void cs_sieve_free(cs_sieve* t) { delete t; }

uint64_t cs_sieve_limit(const cs_sieve* t) { return t->table.limit(); }

cs_status cs_sieve_prime_count(const cs_sieve* t, uint64_t* out) {
  return guarded([&] { *out = t->table.prime_count(); });
}

cs_status cs_sieve_spf(const cs_sieve* t, uint64_t n, uint32_t* out) {
  return guarded([&] {
    if (n < 2 || n > t->table.limit())
      throw std::invalid_argument("spf: n outside table range");
    *out = t->table.spf(n);
  });
}

cs_status cs_classical(const cs_sieve* t, cs_classical_fn f, uint64_t n,
                       double* out) {
  return guarded([&] { *out = classical(t->table, to_fn(f), n); });
}

cs_status cs_omega_split(const cs_sieve* t, uint64_t n, double y,
                         uint32_t* below, uint32_t* at_or_above) {
  return guarded([&] {
    auto [b, a] = omega_split(t->table, n, y);
    *below = b;
    *at_or_above = a;
  });
}

cs_status cs_tau_r(const cs_sieve* t, uint64_t n, double r, double* out) {
  return guarded([&] { *out = tau_r(t->table, n, r); });
}

cs_status cs_tau_pm(const cs_sieve* t, uint64_t n, double kappa1,
                    double kappa2, double y, double* out) {
  return guarded([&] { *out = tau_pm(t->table, n, kappa1, kappa2, y); });
}

cs_status cs_alpha_weight(const cs_sieve* t, uint64_t n, double kappa,
                          uint64_t scale_N, double* out) {
  return guarded([&] { *out = alpha_weight(t->table, n, kappa, scale_N); });
}

cs_status cs_alpha_closed_squarefree(const cs_sieve* t, uint64_t n,
                                     double kappa, uint64_t scale_N,
                                     double* out) {
  return guarded(
      [&] { *out = alpha_closed_squarefree(t->table, n, kappa, scale_N); });
}

cs_status cs_check_leibnitz(const cs_sieve* t, double kappa, uint64_t limit,
                            double* max_deviation) {
  return guarded(
      [&] { *max_deviation = check_leibnitz(t->table, kappa, limit); });
}

cs_status cs_alpha_identity_check(const cs_sieve* t, double kappa,
                                  uint64_t limit, uint64_t scale_N,
                                  double* max_deviation) {
  return guarded([&] {
    *max_deviation = alpha_identity_check(t->table, kappa, limit, scale_N);
  });
}

cs_status cs_seq_create(uint64_t limit, const double* values_1_based,
                        cs_seq** out) {
  return guarded([&] {
    ArithSeq s = make_seq(limit);
    if (values_1_based)
      std::memcpy(s.values.data() + 1, values_1_based,
                  limit * sizeof(double));
    *out = new cs_seq{std::move(s)};
  });
}

cs_status cs_seq_delta(uint64_t limit, uint64_t at, cs_seq** out) {
  return guarded([&] { *out = new cs_seq{delta_seq(limit, at)}; });
}

cs_status cs_seq_ones(uint64_t limit, cs_seq** out) {
  return guarded([&] { *out = new cs_seq{ones_seq(limit)}; });
}

cs_status cs_seq_classical(const cs_sieve* t, cs_classical_fn f,
                           uint64_t limit, cs_seq** out) {
  return guarded(
      [&] { *out = new cs_seq{classical_seq(t->table, to_fn(f), limit)}; });
}

cs_status cs_seq_coefficient_preset(const cs_sieve* t, uint64_t scale,
                                    uint64_t limit, cs_seq** out) {
  return guarded(
      [&] { *out = new cs_seq{coefficient_preset(t->table, scale, limit)}; });
}

void cs_seq_free(cs_seq* s) { delete s; }

uint64_t cs_seq_limit(const cs_seq* s) { return s->seq.limit(); }

cs_status cs_seq_get(const cs_seq* s, uint64_t n, double* out) {
  return guarded([&] {
    if (n < 1 || n > s->seq.limit())
      throw std::invalid_argument("seq_get: n outside range");
    *out = s->seq.values[n];
  });
}

cs_status cs_dirichlet_convolve(const cs_seq* a, const cs_seq* b,
                                uint64_t limit, cs_seq** out) {
  return guarded(
      [&] { *out = new cs_seq{dirichlet_convolve(a->seq, b->seq, limit)}; });
}

cs_status cs_log_multiply(const cs_seq* a, cs_seq** out) {
  return guarded([&] { *out = new cs_seq{log_multiply(a->seq)}; });
}

cs_status cs_is_admissible_pair(int64_t h1, int64_t h2, int* out) {
  return guarded([&] { *out = is_admissible_pair(h1, h2) ? 1 : 0; });
}

cs_status cs_single_correlation(const cs_sieve* t, double kappa, uint64_t N,
                                cs_report* out) {
  return guarded(
      [&] { fill_report(single_correlation(t->table, kappa, N), out); });
}

cs_status cs_two_point_log_avg(const cs_sieve* t, int64_t h1, int64_t h2,
                               double kappa, uint64_t N, double h_of_N,
                               cs_report* out) {
  return guarded([&] {
    fill_report(two_point_log_avg(t->table, {h1, h2}, kappa, N, h_of_N), out);
  });
}

cs_status cs_two_point_plain(const cs_sieve* t, int64_t h1, int64_t h2,
                             const cs_weight_spec* w, uint64_t N,
                             cs_report* out) {
  return guarded([&] {
    WeightSpec spec;
    spec.kind = w->kind == CS_WEIGHT_TAU_PM ? WeightKind::tau_pm
                                            : WeightKind::alpha_kappa;
    spec.kappa = w->kappa;
    spec.kappa1 = w->kappa1;
    spec.kappa2 = w->kappa2;
    spec.y = w->y;
    spec.scale_N = N;
    fill_report(two_point_plain(t->table, {h1, h2}, spec, N), out);
  });
}

cs_status cs_chowla_raw(const cs_sieve* t, int64_t h1, int64_t h2, uint64_t N,
                        double* out) {
  return guarded([&] { *out = chowla_raw(t->table, {h1, h2}, N); });
}

cs_status cs_discrepancy(const cs_seq* a, uint64_t q, uint64_t residue,
                         double* out) {
  return guarded([&] { *out = discrepancy(a->seq, q, residue); });
}

cs_status cs_geh_aggregate(const cs_seq* a, const cs_seq* b, uint64_t D,
                           uint64_t limit, double* per_q, double* total) {
  return guarded([&] {
    DiscrepancyReport rep = geh_aggregate(a->seq, b->seq, D, limit);
    if (per_q)
      for (const auto& [q, sup] : rep.per_q) per_q[q - 1] = sup;
    *total = rep.total;
  });
}

cs_status cs_rough_stats_compute(const cs_sieve* t, uint64_t x, double y,
                                 cs_rough_stats* out, uint64_t* histogram,
                                 size_t histogram_len) {
  return guarded([&] {
    RoughSetStats s = rough_stats(t->table, x, y);
    out->x = s.x;
    out->y = s.y;
    out->count = s.count;
    out->u = s.u;
    for (size_t i = 0; i < histogram_len && histogram; ++i)
      histogram[i] = i < s.omega_histogram.size() ? s.omega_histogram[i] : 0;
  });
}

cs_status cs_alladi_distance(const cs_sieve* t, uint64_t x, double y,
                             double* out) {
  return guarded([&] { *out = alladi_distance(t->table, x, y); });
}

cs_status cs_euler_f(const cs_sieve* t, double z, uint64_t prime_limit,
                     double* value, double* tail_bound) {
  return guarded([&] {
    EulerProduct f = euler_F(t->table, z, prime_limit);
    *value = f.value;
    if (tail_bound) *tail_bound = f.tail_bound;
  });
}

cs_status cs_selberg_pi_k(const cs_sieve* t, uint64_t x, uint32_t k,
                          cs_fit* out) {
  return guarded([&] { fill_fit(selberg_pi_k(t->table, x, k), out); });
}

cs_status cs_mean_tau(const cs_sieve* t, uint64_t x, double kappa,
                      cs_fit* out) {
  return guarded([&] { fill_fit(mean_tau_kappa(t->table, x, kappa), out); });
}

}  // extern "C"
