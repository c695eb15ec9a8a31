#include "corrsieve/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "corrsieve/arith.hpp"
#include "corrsieve/util.hpp"

namespace corrsieve {

namespace {

double rising_over_factorial(double r, uint32_t m) {
  double f = 1.0;
  for (uint32_t j = 0; j < m; ++j) f *= (r + j) / (j + 1);
  return f;
}

double pow_int(double x, uint32_t k) {
  double f = 1.0;
  for (uint32_t j = 0; j < k; ++j) f *= x;
  return f;
}

constexpr size_t kMaxOmega = 16;  // omega(n) <= 10 below 2^32

// Enumerates the squarefree divisors d of n and accumulates
//   s1 = sum mu(d) tau_{1+kappa}(n/d)
//   s2 = sum mu(d) tau_{1+kappa}(n/d) log d
// so the weight is (s1 log n - s2) / log N. Splitting off the exact
// integer combination s1 keeps the kappa = 0 cancellation sharp.
struct DivisorSum {
  size_t k = 0;
  double logp[kMaxOmega];
  double tau_full[kMaxOmega];  // factor for exponent e
  double tau_red[kMaxOmega];   // factor for exponent e - 1
  CompensatedSum s1, s2;

  void descend(size_t i, double sign, double tau_prod, double log_d) {
    if (i == k) {
      s1.add(sign * tau_prod);
      s2.add(sign * tau_prod * log_d);
      return;
    }
    descend(i + 1, sign, tau_prod * tau_full[i], log_d);
    descend(i + 1, -sign, tau_prod * tau_red[i], log_d + logp[i]);
  }
};

}  // namespace

double alpha_weight(const SpfTable& t, uint64_t n, double kappa, uint64_t N) {
  if (n < 1 || n > t.limit())
    throw std::invalid_argument("alpha_weight: n outside sieve table range");
  if (N < 2) throw std::invalid_argument("alpha_weight: N must be >= 2");
  Factorization fac = t.factorize(n);
  DivisorSum ds;
  ds.k = fac.factors.size();
  double log_n = 0.0;
  for (size_t i = 0; i < ds.k; ++i) {
    const auto& f = fac.factors[i];
    ds.logp[i] = std::log(static_cast<double>(f.prime));
    ds.tau_full[i] = rising_over_factorial(1.0 + kappa, f.exponent);
    ds.tau_red[i] = rising_over_factorial(1.0 + kappa, f.exponent - 1);
    log_n += f.exponent * ds.logp[i];
  }
  ds.descend(0, 1.0, 1.0, 0.0);
  double log_N = std::log(static_cast<double>(N));
  return (ds.s1.value() * log_n - ds.s2.value()) / log_N;
}

double alpha_closed_squarefree(const SpfTable& t, uint64_t n, double kappa,
                               uint64_t N) {
  if (n < 1 || n > t.limit())
    throw std::invalid_argument(
        "alpha_closed_squarefree: n outside sieve table range");
  if (N < 2)
    throw std::invalid_argument("alpha_closed_squarefree: N must be >= 2");
  if (!is_squarefree(t, n))
    throw std::invalid_argument("alpha_closed_squarefree: n not squarefree");
  if (n == 1) return 0.0;  // log factor vanishes; kappa^{-1} never formed
  uint32_t k = omega(t, n);
  double ratio = std::log(static_cast<double>(n)) /
                 std::log(static_cast<double>(N));
  return ratio * (pow_int(kappa, k) + pow_int(kappa, k - 1));
}

double alpha_identity_check(const SpfTable& t, double kappa, uint64_t limit,
                            uint64_t N) {
  if (limit > t.limit())
    throw std::invalid_argument(
        "alpha_identity_check: limit exceeds sieve table");
  // Independent route: L tau_kappa + Lambda * tau_kappa via sieved tables.
  ArithSeq tau_k = tau_r_seq(t, kappa, limit);
  ArithSeq lambda_vm = classical_seq(t, ClassicalFn::von_mangoldt, limit);
  ArithSeq conv = dirichlet_convolve(lambda_vm, tau_k, limit);
  ArithSeq ltau = log_multiply(tau_k);

  double log_N = std::log(static_cast<double>(N));
  auto parts = map_chunks<double>(1, limit, [&](uint64_t lo, uint64_t hi) {
    double dev = 0.0;
    for (uint64_t n = lo; n <= hi; ++n) {
      double a = alpha_weight(t, n, kappa, N) * log_N;
      double d = std::abs(a - (ltau.values[n] + conv.values[n]));
      if (d > dev) dev = d;
      if (is_squarefree(t, n)) {
        double c = alpha_closed_squarefree(t, n, kappa, N) * log_N;
        double d2 = std::abs(a - c);
        if (d2 > dev) dev = d2;
      }
    }
    return dev;
  });
  double max_dev = 0.0;
  for (double d : parts) max_dev = std::max(max_dev, d);
  return max_dev;
}

}  // namespace corrsieve
