#pragma once

#include <cstdint>

#include "corrsieve/sieve.hpp"

namespace corrsieve {

enum class WeightKind { alpha_kappa, tau_pm };

struct WeightSpec {
  WeightKind kind = WeightKind::alpha_kappa;
  double kappa = 0.0;            // alpha_kappa
  double kappa1 = 0.0;           // tau_pm, requires 0 <= kappa1 < kappa2
  double kappa2 = 1.0;
  double y = 2.0;
  uint64_t scale_N = 2;
};

// Sieve weight alpha_kappa(n) = sum over d | n of
//   mu(d) tau_{1+kappa}(n/d) (log n - log d) / log N,
// evaluated exactly over the squarefree divisors of n.
double alpha_weight(const SpfTable& t, uint64_t n, double kappa, uint64_t N);

// (log n / log N)(kappa^omega(n) + kappa^{omega(n)-1}) for squarefree n;
// rejects non-squarefree input. Returns 0 at n = 1 without touching the
// kappa^{-1} symbol.
double alpha_closed_squarefree(const SpfTable& t, uint64_t n, double kappa,
                               uint64_t N);

// Larger of: max |log N * alpha(n) - (L tau_kappa + Lambda * tau_kappa)(n)|
// over all n <= limit, and max |alpha(n) - closed form| * log N over
// squarefree n <= limit.
double alpha_identity_check(const SpfTable& t, double kappa, uint64_t limit,
                            uint64_t N);

}  // namespace corrsieve
