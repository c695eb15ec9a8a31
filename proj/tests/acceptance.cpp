// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must point at the corrsieve-cli binary (used by
// the determinism criterion).

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corrsieve.h"
#include "corrsieve/arith.hpp"
#include "corrsieve/correlation.hpp"
#include "corrsieve/distribution.hpp"
#include "corrsieve/sieve.hpp"
#include "corrsieve/util.hpp"
#include "corrsieve/weights.hpp"

using namespace corrsieve;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name
            << " (" << detail << ")\n";
  std::cout.flush();
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& bin, const std::string& args,
                    int* exit_code) {
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int st = pclose(pipe);
  *exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

// Independent arithmetic by trial division, used where a criterion calls
// for a brute-force oracle.
int mu_trial(uint64_t n) {
  int mu = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

void omega_split_trial(uint64_t n, double y, uint32_t* below,
                       uint32_t* above) {
  *below = 0;
  *above = 0;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    if (static_cast<double>(p) < y)
      ++*below;
    else
      ++*above;
  }
  if (n > 1) {
    if (static_cast<double>(n) < y)
      ++*below;
    else
      ++*above;
  }
}

double tau_pm_trial(uint64_t n, double k1, double k2, double y) {
  if (mu_trial(n) == 0 && n > 1) return 0.0;
  uint32_t b = 0, a = 0;
  omega_split_trial(n, y, &b, &a);
  double out = 1.0;
  for (uint32_t j = 0; j < b; ++j) out *= k1;
  for (uint32_t j = 0; j < a; ++j) out *= k2;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  set_thread_count(std::clamp(hw, 1, 8));

  auto t_build = Clock::now();
  SpfTable table(10000002);
  std::cout << "# sieve table to 10^7+2 built in " << seconds_since(t_build)
            << " s\n";

  // 1. Leibniz-type convolution identity at 10^5.
  {
    auto t0 = Clock::now();
    double worst = 0.0;
    for (double kappa : {0.0, 0.3, 0.5, 1.0, 1.7})
      worst = std::max(worst, check_leibnitz(table, kappa, 100000));
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << "max deviation " << worst << ", " << dt << " s";
    report(1, "Leibniz identity", worst < 1e-9 && dt < 10.0, d.str());
  }

  // 2. alpha_0 degenerates to von Mangoldt at 10^6.
  {
    auto t0 = Clock::now();
    const uint64_t N = 1000000;
    const double log_N = std::log(static_cast<double>(N));
    auto parts = map_chunks<double>(1, N, [&](uint64_t lo, uint64_t hi) {
      double worst = 0.0;
      for (uint64_t n = lo; n <= hi; ++n) {
        double a = alpha_weight(table, n, 0.0, N) * log_N;
        double lam = von_mangoldt(table, n);
        double err = lam != 0.0 ? std::abs(a - lam) / lam : std::abs(a);
        worst = std::max(worst, err);
      }
      return worst;
    });
    double worst = 0.0;
    for (double p : parts) worst = std::max(worst, p);
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << "max relative error " << worst << ", " << dt << " s";
    report(2, "alpha_0 equals Lambda / log N", worst < 1e-12 && dt < 10.0,
           d.str());
  }

  // 3. Divisor-sum alpha matches the closed squarefree form at 10^6.
  {
    const uint64_t N = 1000000;
    double worst = 0.0;
    for (double kappa : {0.0, 0.5, 1.0}) {
      auto parts = map_chunks<double>(1, N, [&](uint64_t lo, uint64_t hi) {
        double w = 0.0;
        for (uint64_t n = lo; n <= hi; ++n) {
          if (!is_squarefree(table, n)) continue;
          double a = alpha_weight(table, n, kappa, N);
          double c = alpha_closed_squarefree(table, n, kappa, N);
          w = std::max(w, std::abs(a - c));
        }
        return w;
      });
      for (double p : parts) worst = std::max(worst, p);
    }
    std::ostringstream d;
    d << "max deviation " << worst;
    report(3, "closed squarefree form", worst < 1e-9, d.str());
  }

  // 4. mu * 1 equals the convolution unit exactly on [1, 10^6].
  {
    const uint64_t N = 1000000;
    ArithSeq mu = classical_seq(table, ClassicalFn::mobius, N);
    ArithSeq conv = dirichlet_convolve(mu, ones_seq(N), N);
    bool ok = conv.values[1] == 1.0;
    for (uint64_t n = 2; n <= N && ok; ++n) ok = conv.values[n] == 0.0;
    report(4, "mu * 1 = unit exactly", ok, ok ? "exact" : "mismatch");
  }

  // 5. alpha_0 single correlation locks to -1.
  {
    CorrelationReport r = single_correlation(table, 0.0, 1000000);
    std::ostringstream d;
    d << "ratio " << r.ratio;
    report(5, "alpha_0 single correlation",
           r.ratio_defined && r.ratio >= -1.0 && r.ratio <= -0.99, d.str());
  }

  // 6. alpha_1 single correlation shrinks from 10^4 to 10^7.
  {
    CorrelationReport small = single_correlation(table, 1.0, 10000);
    CorrelationReport big = single_correlation(table, 1.0, 10000000);
    std::ostringstream d;
    d << "|ratio| " << std::abs(small.ratio) << " at 10^4 -> "
      << std::abs(big.ratio) << " at 10^7";
    report(6, "alpha_1 single correlation trend",
           small.ratio_defined && big.ratio_defined &&
               std::abs(big.ratio) < std::abs(small.ratio),
           d.str());
  }

  // 7. Log-averaged two-point alpha_1 sum shrinks from 10^4 to 10^7.
  {
    CorrelationReport small =
        two_point_log_avg(table, {0, 2}, 1.0, 10000, std::sqrt(10000.0));
    CorrelationReport big =
        two_point_log_avg(table, {0, 2}, 1.0, 10000000,
                          std::sqrt(10000000.0));
    std::ostringstream d;
    d << "|ratio| " << std::abs(small.ratio) << " at 10^4 -> "
      << std::abs(big.ratio) << " at 10^7";
    report(7, "log-averaged two-point trend",
           small.ratio_defined && big.ratio_defined &&
               std::abs(big.ratio) < std::abs(small.ratio),
           d.str());
  }

  // 8. Generalized two-point sums against an independent double loop.
  {
    const uint64_t N = 2000;
    const double delta = 0.3;
    const double y =
        std::exp(std::pow(std::log(static_cast<double>(N)), delta));
    double worst = 0.0;
    for (double k1 : {0.0, 0.5}) {
      cs_weight_spec w{CS_WEIGHT_TAU_PM, 0.0, k1, 1.0, y};
      cs_sieve* handle = nullptr;
      cs_sieve_build(N + 2, &handle);
      cs_report rep;
      cs_two_point_plain(handle, 0, 2, &w, N, &rep);
      cs_sieve_free(handle);
      double ws = 0.0, ns = 0.0;
      for (uint64_t n = (N + 1) / 2; n <= N; ++n) {
        double a = tau_pm_trial(n, k1, 1.0, y) *
                   tau_pm_trial(n + 2, k1, 1.0, y);
        ws += mu_trial(n) * mu_trial(n + 2) * a;
        ns += a;
      }
      worst = std::max(worst, std::abs(rep.weighted_sum - ws));
      worst = std::max(worst, std::abs(rep.normalizer_sum - ns));
    }
    std::ostringstream d;
    d << "max deviation from brute force " << worst;
    report(8, "generalized two-point oracle equivalence", worst < 1e-9,
           d.str());
  }

  // 9. Discrepancy telescoping and aggregate brute force.
  {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<uint64_t> qdist(1, 50);
    std::uniform_real_distribution<double> vdist(-2.0, 2.0);
    double worst_sum = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      uint64_t q = qdist(rng);
      ArithSeq a = make_seq(300);
      for (uint64_t n = 1; n <= 300; ++n) a[n] = vdist(rng);
      double s = 0.0;
      for (uint64_t r = 0; r < q; ++r)
        if (std::gcd(r, q) == 1) s += discrepancy(a, q, r);
      worst_sum = std::max(worst_sum, std::abs(s));
    }

    ArithSeq a = classical_seq(table, ClassicalFn::mobius, 2000);
    ArithSeq b = ones_seq(2000);
    DiscrepancyReport rep = geh_aggregate(a, b, 50, 2000);
    double worst_geh = 0.0;
    for (uint64_t q = 1; q <= 50; ++q) {
      std::vector<double> bucket(q, 0.0);
      for (uint64_t d = 1; d <= 2000; ++d)
        for (uint64_t m = 1; d * m <= 2000; ++m)
          bucket[(d * m) % q] += a.values[d] * b.values[m];
      uint64_t phi = 0;
      double cop = 0.0;
      for (uint64_t c = 0; c < q; ++c)
        if (std::gcd(c, q) == 1) {
          ++phi;
          cop += bucket[c];
        }
      double sup = 0.0;
      for (uint64_t c = 0; c < q; ++c) {
        if (std::gcd(c, q) != 1) continue;
        sup = std::max(sup, std::abs(bucket[c] - cop / phi));
      }
      worst_geh =
          std::max(worst_geh, std::abs(rep.per_q[q - 1].second - sup));
    }
    std::ostringstream d;
    d << "class-sum residual " << worst_sum << ", aggregate deviation "
      << worst_geh;
    report(9, "discrepancy identities", worst_sum < 1e-10 && worst_geh < 1e-9,
           d.str());
  }

  // 10. Alladi normality distance shrinks with x.
  {
    auto t0 = Clock::now();
    double small = alladi_distance(table, 10000, 10.0);
    double big = alladi_distance(table, 10000000, 10.0);
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << "KS " << small << " at 10^4 -> " << big << " at 10^7, " << dt
      << " s";
    report(10, "Alladi distance trend", big < small && dt < 60.0, d.str());
  }

  // 11. Euler product special values.
  {
    bool ok = true;
    double worst = 0.0;
    for (uint64_t pl : {100u, 10000u, 1000000u}) {
      EulerProduct f = euler_F(table, 1.0, pl);
      worst = std::max(worst, std::abs(f.value - 1.0));
    }
    ok = worst < 1e-12;
    EulerProduct f0 = euler_F(table, 0.0, 1000);
    ok = ok && f0.value == 1.0;
    std::ostringstream d;
    d << "max |F(1) - 1| = " << worst << ", F(0) = " << f0.value;
    report(11, "Euler product telescoping", ok, d.str());
  }

  // 12. Selberg pi_k totals and ratio band.
  {
    uint64_t total = 1;  // n = 1
    for (uint32_t k = 1; k <= 8; ++k)
      total += static_cast<uint64_t>(selberg_pi_k(table, 100000, k).observed);
    AsymptoticFit f2 = selberg_pi_k(table, 10000000, 2);
    AsymptoticFit f3 = selberg_pi_k(table, 10000000, 3);
    bool ok = total == 100000 && f2.ratio_defined && f3.ratio_defined &&
              f2.ratio >= 0.5 && f2.ratio <= 1.5 && f3.ratio >= 0.5 &&
              f3.ratio <= 1.5;
    std::ostringstream d;
    d << "total " << total << ", ratios k=2: " << f2.ratio
      << ", k=3: " << f3.ratio;
    report(12, "Selberg pi_k", ok, d.str());
  }

  // 13. Byte-identical CLI output across parallelism settings.
  {
    bool ok = !cli.empty();
    std::string detail = cli.empty() ? "cli path missing" : "";
    const char* cases[] = {
        "single-corr --kappa 0.5 --N 200000",
        "chowla-general --h1 0 --h2 2 --kappa1 0.5 --kappa2 1 --N 50000",
        "alladi --x 100000 --y 10",
        "geh-sum --alpha-func mobius --beta-func one --N 2000 --D 30",
    };
    for (const char* c : cases) {
      if (!ok) break;
      int ec1 = 0, ec2 = 0;
      std::string o1 = run_cli(cli, std::string(c) + " --threads 1", &ec1);
      std::string o2 = run_cli(cli, std::string(c) + " --threads 4", &ec2);
      if (ec1 != 0 || ec2 != 0 || o1 != o2 || o1.empty()) {
        ok = false;
        detail = std::string("mismatch for: ") + c;
      }
    }
    if (ok) detail = "4 commands byte-identical";
    report(13, "determinism across thread counts", ok, detail);
  }

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED\n"
                                : "FAILURES: " + std::to_string(g_failures) +
                                      "\n");
  return g_failures == 0 ? 0 : 1;
}
