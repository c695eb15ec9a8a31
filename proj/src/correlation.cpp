#include "corrsieve/correlation.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "corrsieve/util.hpp"

namespace corrsieve {

bool is_admissible_pair(int64_t h1, int64_t h2) {
  if (h1 == h2) throw std::invalid_argument("shift pair requires h1 != h2");
  // Two residues can only cover all classes mod p when p = 2.
  return ((h1 - h2) % 2) == 0;
}

namespace {

CorrelationReport finalize(uint64_t lo, uint64_t hi, double weighted,
                           double normalizer) {
  CorrelationReport r;
  r.lo = lo;
  r.hi = hi;
  r.weighted_sum = weighted;
  r.normalizer_sum = normalizer;
  if (normalizer != 0.0) {
    r.ratio = weighted / normalizer;
    r.ratio_defined = true;
  }
  return r;
}

// Deterministic two-accumulator fold over [lo, hi]: per-chunk compensated
// partials combined in chunk order, independent of thread count.
template <class TermFn>
CorrelationReport fold_range(uint64_t lo, uint64_t hi, TermFn term) {
  auto parts = map_chunks<std::array<double, 2>>(
      lo, hi, [&](uint64_t clo, uint64_t chi) {
        CompensatedSum w, norm;
        for (uint64_t n = clo; n <= chi; ++n) {
          auto [wt, nt] = term(n);
          w.add(wt);
          norm.add(nt);
        }
        return std::array<double, 2>{w.value(), norm.value()};
      });
  CompensatedSum w, norm;
  for (const auto& p : parts) {
    w.add(p[0]);
    norm.add(p[1]);
  }
  return finalize(lo, hi, w.value(), norm.value());
}

}  // namespace

CorrelationReport single_correlation(const SpfTable& t, double kappa,
                                     uint64_t N) {
  if (N < 2 || N > t.limit())
    throw std::invalid_argument("single_correlation: N outside table range");
  uint64_t lo = (N + 1) / 2;
  return fold_range(lo, N, [&](uint64_t n) {
    double a = alpha_weight(t, n, kappa, N);
    return std::pair<double, double>{liouville(t, n) * a, a};
  });
}

CorrelationReport two_point_log_avg(const SpfTable& t, ShiftPair pair,
                                    double kappa, uint64_t N, double h_of_N) {
  is_admissible_pair(pair.h1, pair.h2);  // validates h1 != h2
  if (h_of_N < 2.0)
    throw std::invalid_argument("two_point_log_avg: h(N) must be >= 2");
  int64_t max_h = std::max(pair.h1, pair.h2);
  int64_t min_h = std::min(pair.h1, pair.h2);
  if (max_h > 0 && N + static_cast<uint64_t>(max_h) > t.limit())
    throw std::invalid_argument("two_point_log_avg: N + shift exceeds table");
  // Inclusive lower endpoint N/h(N) <= n <= N.
  uint64_t lo = static_cast<uint64_t>(
      std::ceil(static_cast<double>(N) / h_of_N));
  if (lo < 1) lo = 1;
  if (min_h < 0) lo = std::max<uint64_t>(lo, 1 + static_cast<uint64_t>(-min_h));
  if (lo > N) throw std::invalid_argument("two_point_log_avg: empty range");
  return fold_range(lo, N, [&](uint64_t n) {
    uint64_t n1 = n + pair.h1;
    uint64_t n2 = n + pair.h2;
    double a = alpha_weight(t, n1, kappa, N) * alpha_weight(t, n2, kappa, N);
    double inv_n = 1.0 / static_cast<double>(n);
    return std::pair<double, double>{
        liouville(t, n1) * liouville(t, n2) * a * inv_n, a * inv_n};
  });
}

CorrelationReport two_point_plain(const SpfTable& t, ShiftPair pair,
                                  const WeightSpec& w, uint64_t N) {
  is_admissible_pair(pair.h1, pair.h2);
  if (w.kind == WeightKind::tau_pm &&
      !(0.0 <= w.kappa1 && w.kappa1 < w.kappa2))
    throw std::invalid_argument("two_point_plain: requires 0 <= k1 < k2");
  int64_t max_h = std::max(pair.h1, pair.h2);
  int64_t min_h = std::min(pair.h1, pair.h2);
  if (max_h > 0 && N + static_cast<uint64_t>(max_h) > t.limit())
    throw std::invalid_argument("two_point_plain: N + shift exceeds table");
  uint64_t lo = (N + 1) / 2;
  if (min_h < 0) lo = std::max<uint64_t>(lo, 1 + static_cast<uint64_t>(-min_h));
  if (lo > N) throw std::invalid_argument("two_point_plain: empty range");

  auto weight = [&](uint64_t n) {
    return w.kind == WeightKind::alpha_kappa
               ? alpha_weight(t, n, w.kappa, N)
               : tau_pm(t, n, w.kappa1, w.kappa2, w.y);
  };
  auto sign = [&](uint64_t n) {
    return w.kind == WeightKind::alpha_kappa ? liouville(t, n) : mobius(t, n);
  };
  return fold_range(lo, N, [&](uint64_t n) {
    uint64_t n1 = n + pair.h1;
    uint64_t n2 = n + pair.h2;
    double a = weight(n1) * weight(n2);
    return std::pair<double, double>{sign(n1) * sign(n2) * a, a};
  });
}

double chowla_raw(const SpfTable& t, ShiftPair pair, uint64_t N) {
  is_admissible_pair(pair.h1, pair.h2);  // shape check only; pair may be odd
  int64_t max_h = std::max(pair.h1, pair.h2);
  int64_t min_h = std::min(pair.h1, pair.h2);
  if (max_h > 0 && N + static_cast<uint64_t>(max_h) > t.limit())
    throw std::invalid_argument("chowla_raw: N + shift exceeds table");
  uint64_t lo = 1;
  if (min_h < 0) lo = 1 + static_cast<uint64_t>(-min_h);
  auto parts = map_chunks<int64_t>(lo, N, [&](uint64_t clo, uint64_t chi) {
    int64_t s = 0;
    for (uint64_t n = clo; n <= chi; ++n)
      s += static_cast<int64_t>(liouville(t, n + pair.h1)) *
           static_cast<int64_t>(liouville(t, n + pair.h2));
    return s;
  });
  int64_t total = 0;
  for (int64_t s : parts) total += s;
  return static_cast<double>(total);
}

double discrepancy(const ArithSeq& a, uint64_t q, uint64_t residue) {
  if (q < 1) throw std::invalid_argument("discrepancy: q must be >= 1");
  uint64_t r = residue % q;
  if (std::gcd(r, q) != 1)
    throw std::invalid_argument("discrepancy: residue not coprime to q");
  CompensatedSum in_class, coprime;
  uint64_t phi = 0;
  for (uint64_t c = 0; c < q; ++c)
    if (std::gcd(c, q) == 1) ++phi;
  for (uint64_t n = 1; n <= a.limit(); ++n) {
    double v = a.values[n];
    if (v == 0.0) continue;
    uint64_t c = n % q;
    if (c == r) in_class.add(v);
    if (std::gcd(c, q) == 1) coprime.add(v);
  }
  return in_class.value() - coprime.value() / static_cast<double>(phi);
}

DiscrepancyReport geh_aggregate(const ArithSeq& a, const ArithSeq& b,
                                uint64_t D, uint64_t limit) {
  if (D < 1) throw std::invalid_argument("geh_aggregate: D must be >= 1");
  ArithSeq conv = dirichlet_convolve(a, b, limit);
  DiscrepancyReport rep;
  rep.D = D;
  rep.per_q.reserve(D);
  CompensatedSum total;
  for (uint64_t q = 1; q <= D; ++q) {
    std::vector<CompensatedSum> bucket(q);
    for (uint64_t n = 1; n <= limit; ++n) {
      double v = conv.values[n];
      if (v != 0.0) bucket[n % q].add(v);
    }
    CompensatedSum coprime;
    uint64_t phi = 0;
    for (uint64_t c = 0; c < q; ++c) {
      if (std::gcd(c, q) == 1) {
        ++phi;
        coprime.add(bucket[c].value());
      }
    }
    double avg = coprime.value() / static_cast<double>(phi);
    double sup = 0.0;
    for (uint64_t c = 0; c < q; ++c) {
      if (std::gcd(c, q) != 1) continue;
      sup = std::max(sup, std::abs(bucket[c].value() - avg));
    }
    rep.per_q.emplace_back(q, sup);
    total.add(sup);
  }
  rep.total = total.value();
  return rep;
}

}  // namespace corrsieve
