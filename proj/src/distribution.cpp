#include "corrsieve/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corrsieve/arith.hpp"
#include "corrsieve/util.hpp"

namespace corrsieve {

namespace {
constexpr size_t kMaxHistogram = 64;

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }
}  // namespace

RoughSetStats rough_stats(const SpfTable& t, uint64_t x, double y) {
  if (x < 1 || x > t.limit())
    throw std::invalid_argument("rough_stats: x outside table range");
  if (y < 2.0) throw std::invalid_argument("rough_stats: y must be >= 2");

  using Hist = std::vector<uint64_t>;
  auto parts = map_chunks<Hist>(1, x, [&](uint64_t lo, uint64_t hi) {
    Hist h(kMaxHistogram, 0);
    for (uint64_t n = lo; n <= hi; ++n) {
      // n = 1 has no prime divisor, so its least prime divisor is +infinity.
      if (n != 1 && static_cast<double>(t.spf(n)) < y) continue;
      ++h[omega(t, n)];
    }
    return h;
  });

  RoughSetStats out;
  out.x = x;
  out.y = y;
  out.u = std::log(static_cast<double>(x)) / std::log(y);
  out.omega_histogram.assign(kMaxHistogram, 0);
  for (const auto& h : parts)
    for (size_t i = 0; i < kMaxHistogram; ++i) out.omega_histogram[i] += h[i];
  while (out.omega_histogram.size() > 1 && out.omega_histogram.back() == 0)
    out.omega_histogram.pop_back();
  for (uint64_t c : out.omega_histogram) out.count += c;
  return out;
}

double alladi_distance(const SpfTable& t, uint64_t x, double y) {
  RoughSetStats stats = rough_stats(t, x, y);
  if (stats.u <= 1.0)
    throw std::invalid_argument("alladi_distance: requires log x / log y > 1");
  double log_u = std::log(stats.u);
  double scale = std::sqrt(log_u);
  double total = static_cast<double>(stats.count);

  double dist = 0.0;
  uint64_t cum = 0;
  for (size_t w = 0; w < stats.omega_histogram.size(); ++w) {
    uint64_t c = stats.omega_histogram[w];
    if (c == 0) continue;
    double tpt = (static_cast<double>(w) - log_u) / scale;
    double phi = normal_cdf(tpt);
    double below = static_cast<double>(cum) / total;
    cum += c;
    double at = static_cast<double>(cum) / total;
    dist = std::max(dist, std::max(std::abs(at - phi), std::abs(below - phi)));
  }
  return dist;
}

EulerProduct euler_F(const SpfTable& t, double z, uint64_t prime_limit) {
  if (z <= -1.0)
    throw std::invalid_argument("euler_F: z must be > -1 (Gamma pole)");
  if (prime_limit < 2 || prime_limit > t.limit())
    throw std::invalid_argument("euler_F: prime_limit outside table range");
  // Accumulate in log space; the per-prime log factors nearly cancel, so a
  // compensated sum keeps F(1) = 1 to full precision at any truncation.
  CompensatedSum log_prod;
  for (uint64_t p = 2; p <= prime_limit; ++p) {
    if (!t.is_prime(p)) continue;
    double pd = static_cast<double>(p);
    log_prod.add(std::log1p(z / (pd - 1.0)));
    log_prod.add(z * std::log1p(-1.0 / pd));
  }
  EulerProduct out;
  out.value = std::exp(log_prod.value()) / std::tgamma(z + 1.0);
  // log of each omitted factor is ~ z(z-1)/(2 p^2); the prime density
  // 1/log p turns the sum over p > P into ~ 1/(P log P).
  double pl = static_cast<double>(prime_limit);
  out.tail_bound = std::abs(z * (z - 1.0)) / 2.0 / (pl * std::log(pl));
  return out;
}

AsymptoticFit selberg_pi_k(const SpfTable& t, uint64_t x, uint32_t k) {
  if (x < 3 || x > t.limit())
    throw std::invalid_argument("selberg_pi_k: x outside table range");
  auto parts = map_chunks<uint64_t>(1, x, [&](uint64_t lo, uint64_t hi) {
    uint64_t c = 0;
    for (uint64_t n = lo; n <= hi; ++n)
      if (omega(t, n) == k) ++c;
    return c;
  });
  uint64_t observed = 0;
  for (uint64_t c : parts) observed += c;

  AsymptoticFit out;
  out.observed = static_cast<double>(observed);
  if (k == 0) return out;  // degenerate: only n = 1, no prediction

  double log_x = std::log(static_cast<double>(x));
  double llx = std::log(log_x);
  double z = (static_cast<double>(k) - 1.0) / llx;
  EulerProduct f = euler_F(t, z, std::min<uint64_t>(1000000, t.limit()));
  double fact = 1.0;
  for (uint32_t j = 2; j < k; ++j) fact *= j;
  out.predicted = f.value * static_cast<double>(x) / log_x *
                  std::pow(llx, static_cast<double>(k) - 1.0) / fact;
  out.extra = f.tail_bound;
  if (out.predicted != 0.0) {
    out.ratio = out.observed / out.predicted;
    out.ratio_defined = true;
  }
  return out;
}

AsymptoticFit mean_tau_kappa(const SpfTable& t, uint64_t x, double kappa) {
  if (x < 16 || x > t.limit())
    throw std::invalid_argument("mean_tau_kappa: x outside table range");

  std::vector<uint64_t> cuts;
  for (uint64_t d = 1000; d >= 1; d /= 10) {
    uint64_t c = x / d;
    if (c >= 16 && (cuts.empty() || c > cuts.back())) cuts.push_back(c);
  }

  CompensatedSum sum;
  std::vector<double> partial;
  size_t ci = 0;
  for (uint64_t n = 1; n <= x; ++n) {
    sum.add(tau_r(t, n, kappa));
    if (ci < cuts.size() && n == cuts[ci]) {
      partial.push_back(sum.value());
      ++ci;
    }
  }

  auto model = [&](uint64_t xx) {
    double lx = std::log(static_cast<double>(xx));
    return static_cast<double>(xx) * std::pow(lx, kappa - 1.0);
  };
  double c_sum = 0.0;
  for (size_t j = 0; j < cuts.size(); ++j) c_sum += partial[j] / model(cuts[j]);
  double c = c_sum / static_cast<double>(cuts.size());
  double residual = 0.0;
  for (size_t j = 0; j < cuts.size(); ++j)
    residual = std::max(residual,
                        std::abs(partial[j] / model(cuts[j]) - c));

  AsymptoticFit out;
  out.observed = partial.back();
  out.predicted = c * model(x);
  out.extra = residual;
  out.c_fit = c;
  if (out.predicted != 0.0) {
    out.ratio = out.observed / out.predicted;
    out.ratio_defined = true;
  }
  return out;
}

}  // namespace corrsieve
