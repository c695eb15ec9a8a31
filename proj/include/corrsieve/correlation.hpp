#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "corrsieve/arith.hpp"
#include "corrsieve/sieve.hpp"
#include "corrsieve/weights.hpp"

namespace corrsieve {

struct ShiftPair {
  int64_t h1;
  int64_t h2;
};

// True iff {h1, h2} misses a residue class modulo every prime; for pairs
// this reduces to h1 == h2 (mod 2).
bool is_admissible_pair(int64_t h1, int64_t h2);

struct CorrelationReport {
  uint64_t lo = 0;
  uint64_t hi = 0;
  double weighted_sum = 0.0;
  double normalizer_sum = 0.0;
  double ratio = 0.0;
  bool ratio_defined = false;
};

// sum of lambda(n) alpha_kappa(n) over ceil(N/2) <= n <= N, against the
// same sum without the lambda factor.
CorrelationReport single_correlation(const SpfTable& t, double kappa,
                                     uint64_t N);

// 1/n-averaged two-point sum of lambda(n+h1)lambda(n+h2)alpha(n+h1)alpha(n+h2)
// over N/h_of_N < n <= N.
CorrelationReport two_point_log_avg(const SpfTable& t, ShiftPair pair,
                                    double kappa, uint64_t N, double h_of_N);

// Plain two-point sum over ceil(N/2) <= n <= N. alpha_kappa weights pair
// with lambda, tau_pm weights with mu; the normalizer drops the
// lambda/mu factors.
CorrelationReport two_point_plain(const SpfTable& t, ShiftPair pair,
                                  const WeightSpec& w, uint64_t N);

// sum over n <= N of lambda(n+h1)lambda(n+h2); exact integer value.
double chowla_raw(const SpfTable& t, ShiftPair pair, uint64_t N);

// Signed discrepancy of a on the primitive class residue (mod q).
double discrepancy(const ArithSeq& a, uint64_t q, uint64_t residue);

struct DiscrepancyReport {
  uint64_t D = 0;
  std::vector<std::pair<uint64_t, double>> per_q;  // (q, sup over classes)
  double total = 0.0;
};

// Sum over q <= D of the sup over primitive classes of |discrepancy| of
// the Dirichlet convolution a * b truncated to [1, limit].
DiscrepancyReport geh_aggregate(const ArithSeq& a, const ArithSeq& b,
                                uint64_t D, uint64_t limit);

}  // namespace corrsieve
