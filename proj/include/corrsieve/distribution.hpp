#pragma once

#include <cstdint>
#include <vector>

#include "corrsieve/sieve.hpp"

namespace corrsieve {

// y-rough integers up to x: least prime divisor >= y, with 1 included.
struct RoughSetStats {
  uint64_t x = 0;
  double y = 0.0;
  uint64_t count = 0;
  double u = 0.0;  // log x / log y
  std::vector<uint64_t> omega_histogram;  // index = omega value
};

RoughSetStats rough_stats(const SpfTable& t, uint64_t x, double y);

// Kolmogorov-Smirnov distance between the standardized omega distribution
// on the y-rough set and the standard normal, evaluated at the jump points.
double alladi_distance(const SpfTable& t, uint64_t x, double y);

struct EulerProduct {
  double value = 0.0;
  double tail_bound = 0.0;
};

// F(z) = 1/Gamma(z+1) * prod over p <= prime_limit of
// (1 + z/(p-1))(1 - 1/p)^z, with an estimated truncation tail.
EulerProduct euler_F(const SpfTable& t, double z, uint64_t prime_limit);

struct AsymptoticFit {
  double observed = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  bool ratio_defined = false;
  double extra = 0.0;   // tail bound or fit residual, per operation
  double c_fit = 0.0;   // fitted leading constant (mean_tau_kappa only)
};

// Count of n <= x with exactly k distinct prime divisors against the
// F((k-1)/loglog x) x/log x (loglog x)^{k-1}/(k-1)! prediction.
AsymptoticFit selberg_pi_k(const SpfTable& t, uint64_t x, uint32_t k);

// Mean of tau_kappa up to x against c x (log x)^{kappa-1}; c is fit over a
// geometric grid of cut points and reported, never asserted.
AsymptoticFit mean_tau_kappa(const SpfTable& t, uint64_t x, double kappa);

}  // namespace corrsieve
