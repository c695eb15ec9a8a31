#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "corrsieve/sieve.hpp"

namespace corrsieve {

// Finitely supported real arithmetic function on [1, limit], dense storage.
// Index 0 is unused; values outside [1, limit] are implicitly zero.
struct ArithSeq {
  std::vector<double> values;
  std::optional<std::pair<uint64_t, uint64_t>> support_hint;

  uint64_t limit() const { return values.size() - 1; }
  double at(uint64_t n) const {
    return (n >= 1 && n < values.size()) ? values[n] : 0.0;
  }
  double& operator[](uint64_t n) { return values[n]; }
};

ArithSeq make_seq(uint64_t limit);
ArithSeq delta_seq(uint64_t limit, uint64_t at);
ArithSeq ones_seq(uint64_t limit);
ArithSeq classical_seq(const SpfTable& t, ClassicalFn f, uint64_t limit);

// Experiment preset: tau_2(n) * log n on (scale/2, scale], zero elsewhere.
ArithSeq coefficient_preset(const SpfTable& t, uint64_t scale, uint64_t limit);

// Real-order divisor function, multiplicative with
// tau_r(p^m) = r(r+1)...(r+m-1)/m! (rising factorial; valid for r <= 0).
double tau_r(const SpfTable& t, uint64_t n, double r);
ArithSeq tau_r_seq(const SpfTable& t, double r, uint64_t limit);

// Split weight kappa1^{omega<y} * kappa2^{omega>=y} on squarefree n
// (0^0 = 1); zero on non-squarefree n.
double tau_pm(const SpfTable& t, uint64_t n, double kappa1, double kappa2,
              double y);

// result[n] = sum over ab = n of a_seq[a] * b_seq[b], truncated to [1, limit].
ArithSeq dirichlet_convolve(const ArithSeq& a, const ArithSeq& b,
                            uint64_t limit);

// Pointwise log(n) * a[n]; entry 1 is always 0.
ArithSeq log_multiply(const ArithSeq& a);

// Max absolute deviation over [1, limit] between
// L x (mu * 1 * tau_kappa) and (L mu) * 1 * tau_kappa + mu * (L tau_{1+kappa}),
// both built from first principles.
double check_leibnitz(const SpfTable& t, double kappa, uint64_t limit);

}  // namespace corrsieve
