#include "corrsieve/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "corrsieve/util.hpp"

namespace corrsieve {

ArithSeq make_seq(uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("ArithSeq limit must be >= 1");
  ArithSeq s;
  s.values.assign(limit + 1, 0.0);
  return s;
}

ArithSeq delta_seq(uint64_t limit, uint64_t at) {
  ArithSeq s = make_seq(limit);
  if (at < 1 || at > limit)
    throw std::invalid_argument("delta_seq: point outside range");
  s[at] = 1.0;
  s.support_hint = {{at, at}};
  return s;
}

ArithSeq ones_seq(uint64_t limit) {
  ArithSeq s = make_seq(limit);
  for (uint64_t n = 1; n <= limit; ++n) s[n] = 1.0;
  return s;
}

ArithSeq classical_seq(const SpfTable& t, ClassicalFn f, uint64_t limit) {
  if (limit > t.limit())
    throw std::invalid_argument("classical_seq: limit exceeds sieve table");
  ArithSeq s = make_seq(limit);
  auto vals = table_of(t, f, 1, limit);
  for (uint64_t n = 1; n <= limit; ++n) s[n] = vals[n - 1];
  return s;
}

ArithSeq coefficient_preset(const SpfTable& t, uint64_t scale,
                            uint64_t limit) {
  if (scale < 2) throw std::invalid_argument("coefficient_preset: scale < 2");
  ArithSeq s = make_seq(limit);
  uint64_t lo = scale / 2 + 1;
  uint64_t hi = std::min(scale, limit);
  for (uint64_t n = lo; n <= hi; ++n)
    s[n] = tau_r(t, n, 2.0) * std::log(static_cast<double>(n));
  if (lo <= hi) s.support_hint = {{lo, hi}};
  return s;
}

namespace {
// tau_r factor for one prime power p^m: r(r+1)...(r+m-1)/m!.
double rising_over_factorial(double r, uint32_t m) {
  double f = 1.0;
  for (uint32_t j = 0; j < m; ++j) f *= (r + j) / (j + 1);
  return f;
}

// x^k for small integer k, with 0^0 = 1.
double pow_int(double x, uint32_t k) {
  double f = 1.0;
  for (uint32_t j = 0; j < k; ++j) f *= x;
  return f;
}
}  // namespace

double tau_r(const SpfTable& t, uint64_t n, double r) {
  if (n < 1 || n > t.limit())
    throw std::invalid_argument("tau_r: n outside sieve table range");
  double out = 1.0;
  while (n > 1) {
    uint64_t p = t.spf(n);
    uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out *= rising_over_factorial(r, e);
  }
  return out;
}

ArithSeq tau_r_seq(const SpfTable& t, double r, uint64_t limit) {
  if (limit > t.limit())
    throw std::invalid_argument("tau_r_seq: limit exceeds sieve table");
  ArithSeq s = make_seq(limit);
  auto parts = map_chunks<int>(1, limit, [&](uint64_t lo, uint64_t hi) {
    for (uint64_t n = lo; n <= hi; ++n) s[n] = tau_r(t, n, r);
    return 0;
  });
  (void)parts;
  return s;
}

double tau_pm(const SpfTable& t, uint64_t n, double kappa1, double kappa2,
              double y) {
  if (n < 1 || n > t.limit())
    throw std::invalid_argument("tau_pm: n outside sieve table range");
  if (!is_squarefree(t, n)) return 0.0;
  auto [below, above] = omega_split(t, n, y);
  return pow_int(kappa1, below) * pow_int(kappa2, above);
}

ArithSeq dirichlet_convolve(const ArithSeq& a, const ArithSeq& b,
                            uint64_t limit) {
  ArithSeq out = make_seq(limit);
  uint64_t amax = std::min(a.limit(), limit);
  for (uint64_t d = 1; d <= amax; ++d) {
    double ad = a.values[d];
    if (ad == 0.0) continue;
    uint64_t mmax = std::min(b.limit(), limit / d);
    const double* bp = b.values.data();
    double* op = out.values.data();
    for (uint64_t m = 1; m <= mmax; ++m) op[d * m] += ad * bp[m];
  }
  return out;
}

ArithSeq log_multiply(const ArithSeq& a) {
  ArithSeq out = make_seq(a.limit());
  out[1] = 0.0;
  for (uint64_t n = 2; n <= a.limit(); ++n)
    out[n] = std::log(static_cast<double>(n)) * a.values[n];
  return out;
}

double check_leibnitz(const SpfTable& t, double kappa, uint64_t limit) {
  if (limit > t.limit())
    throw std::invalid_argument("check_leibnitz: limit exceeds sieve table");
  ArithSeq mu = classical_seq(t, ClassicalFn::mobius, limit);
  ArithSeq one = ones_seq(limit);
  ArithSeq tau_k = tau_r_seq(t, kappa, limit);
  ArithSeq tau_1pk = tau_r_seq(t, 1.0 + kappa, limit);

  ArithSeq lhs =
      log_multiply(dirichlet_convolve(dirichlet_convolve(mu, one, limit),
                                      tau_k, limit));
  ArithSeq term1 = dirichlet_convolve(
      dirichlet_convolve(log_multiply(mu), one, limit), tau_k, limit);
  ArithSeq term2 = dirichlet_convolve(mu, log_multiply(tau_1pk), limit);

  double max_dev = 0.0;
  for (uint64_t n = 1; n <= limit; ++n) {
    double d = std::abs(lhs.values[n] - (term1.values[n] + term2.values[n]));
    if (d > max_dev) max_dev = d;
  }
  return max_dev;
}

}  // namespace corrsieve
