#include "corrsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "corrsieve/util.hpp"

namespace corrsieve {

namespace {
constexpr uint64_t kSegmentSize = uint64_t{1} << 20;
}

SpfTable::SpfTable(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
  if (limit > std::numeric_limits<uint32_t>::max())
    throw std::length_error("SpfTable: limit exceeds 32-bit entry range");

  spf_.assign(limit + 1, 0u);
  spf_[1] = 1;

  // Base primes up to sqrt(limit) by a plain sieve.
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<uint32_t> base;
  {
    std::vector<uint8_t> comp(root + 1, 0);
    for (uint64_t p = 2; p <= root; ++p) {
      if (comp[p]) continue;
      base.push_back(static_cast<uint32_t>(p));
      for (uint64_t m = p * p; m <= root; m += p) comp[m] = 1;
    }
  }

  // Segments are disjoint, so workers never touch the same entries; the
  // result is identical to the sequential build.
  const size_t nsegs = static_cast<size_t>((limit - 2) / kSegmentSize) + 1;
  auto do_segment = [&](size_t si) {
    const uint64_t lo = 2 + si * kSegmentSize;
    const uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
    for (uint32_t p : base) {
      uint64_t p64 = p;
      uint64_t start = std::max(p64 * p64, ((lo + p64 - 1) / p64) * p64);
      for (uint64_t m = start; m <= hi; m += p64)
        if (spf_[m] == 0) spf_[m] = p;
    }
    for (uint64_t n = lo; n <= hi; ++n)
      if (spf_[n] == 0) spf_[n] = static_cast<uint32_t>(n);
  };

  const int nthreads = thread_count();
  if (nthreads <= 1 || nsegs == 1) {
    for (size_t i = 0; i < nsegs; ++i) do_segment(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < nsegs; i = next.fetch_add(1))
        do_segment(i);
    };
    std::vector<std::thread> pool;
    size_t use = std::min<size_t>(static_cast<size_t>(nthreads), nsegs);
    for (size_t i = 0; i < use; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
}

uint64_t SpfTable::prime_count() const {
  auto parts = map_chunks<uint64_t>(2, limit_, [&](uint64_t lo, uint64_t hi) {
    uint64_t c = 0;
    for (uint64_t n = lo; n <= hi; ++n)
      if (spf_[n] == n) ++c;
    return c;
  });
  uint64_t total = 0;
  for (uint64_t c : parts) total += c;
  return total;
}

namespace {
void check_range(const SpfTable& t, uint64_t n) {
  if (n < 1 || n > t.limit())
    throw std::invalid_argument("n outside sieve table range");
}
}  // namespace

Factorization SpfTable::factorize(uint64_t n) const {
  check_range(*this, n);
  Factorization out;
  while (n > 1) {
    uint64_t p = spf_[n];
    uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.factors.push_back({p, e});
  }
  return out;
}

double mobius(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  int sign = 1;
  while (n > 1) {
    uint64_t p = t.spf(n);
    n /= p;
    if (n % p == 0) return 0.0;
    sign = -sign;
  }
  return sign;
}

double liouville(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  int sign = 1;
  while (n > 1) {
    n /= t.spf(n);
    sign = -sign;
  }
  return sign;
}

uint32_t omega(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  uint32_t k = 0;
  while (n > 1) {
    uint64_t p = t.spf(n);
    ++k;
    do n /= p;
    while (n % p == 0);
  }
  return k;
}

uint32_t big_omega(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  uint32_t k = 0;
  while (n > 1) {
    n /= t.spf(n);
    ++k;
  }
  return k;
}

double von_mangoldt(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  if (n == 1) return 0.0;
  uint64_t p = t.spf(n);
  while (n > 1) {
    if (n % p != 0) return 0.0;
    n /= p;
  }
  return std::log(static_cast<double>(p));
}

bool is_squarefree(const SpfTable& t, uint64_t n) {
  check_range(t, n);
  while (n > 1) {
    uint64_t p = t.spf(n);
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

double classical(const SpfTable& t, ClassicalFn f, uint64_t n) {
  switch (f) {
    case ClassicalFn::mobius:
      return mobius(t, n);
    case ClassicalFn::liouville:
      return liouville(t, n);
    case ClassicalFn::omega:
      return omega(t, n);
    case ClassicalFn::big_omega:
      return big_omega(t, n);
    case ClassicalFn::von_mangoldt:
      return von_mangoldt(t, n);
    case ClassicalFn::is_squarefree:
      return is_squarefree(t, n) ? 1.0 : 0.0;
  }
  throw std::invalid_argument("unknown classical function");
}

std::pair<uint32_t, uint32_t> omega_split(const SpfTable& t, uint64_t n,
                                          double y) {
  check_range(t, n);
  uint32_t below = 0, above = 0;
  while (n > 1) {
    uint64_t p = t.spf(n);
    if (static_cast<double>(p) < y)
      ++below;
    else
      ++above;
    do n /= p;
    while (n % p == 0);
  }
  return {below, above};
}

std::vector<double> table_of(const SpfTable& t, ClassicalFn f, uint64_t lo,
                             uint64_t hi) {
  if (lo < 1 || lo > hi || hi > t.limit())
    throw std::invalid_argument("table_of: invalid range");
  std::vector<double> out(hi - lo + 1);
  auto parts = map_chunks<int>(lo, hi, [&](uint64_t clo, uint64_t chi) {
    for (uint64_t n = clo; n <= chi; ++n) out[n - lo] = classical(t, f, n);
    return 0;
  });
  (void)parts;
  return out;
}

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads.store(n < 1 ? 1 : n); }
int thread_count() { return g_threads.load(); }

}  // namespace corrsieve
