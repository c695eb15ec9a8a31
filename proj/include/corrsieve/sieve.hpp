#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace corrsieve {

struct Factorization {
  struct Entry {
    uint64_t prime;
    uint32_t exponent;
  };
  std::vector<Entry> factors;  // primes strictly increasing

  uint32_t omega() const { return static_cast<uint32_t>(factors.size()); }
  uint32_t big_omega() const {
    uint32_t s = 0;
    for (const auto& f : factors) s += f.exponent;
    return s;
  }
};

// Smallest-prime-factor table for [1, limit], built by segmented sieving.
// Immutable after construction; all reads are safe to share across threads.
class SpfTable {
 public:
  explicit SpfTable(uint64_t limit);

  uint64_t limit() const { return limit_; }
  uint32_t spf(uint64_t n) const { return spf_[n]; }
  bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }
  uint64_t prime_count() const;
  Factorization factorize(uint64_t n) const;

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

enum class ClassicalFn {
  mobius,
  liouville,
  omega,
  big_omega,
  von_mangoldt,
  is_squarefree,
};

double mobius(const SpfTable& t, uint64_t n);
double liouville(const SpfTable& t, uint64_t n);
uint32_t omega(const SpfTable& t, uint64_t n);
uint32_t big_omega(const SpfTable& t, uint64_t n);
double von_mangoldt(const SpfTable& t, uint64_t n);
bool is_squarefree(const SpfTable& t, uint64_t n);
double classical(const SpfTable& t, ClassicalFn f, uint64_t n);

// Distinct prime divisors below y and >= y; sums to omega(n).
std::pair<uint32_t, uint32_t> omega_split(const SpfTable& t, uint64_t n,
                                          double y);

// Dense evaluation of f over [lo, hi]; entry i is f(lo + i).
std::vector<double> table_of(const SpfTable& t, ClassicalFn f, uint64_t lo,
                             uint64_t hi);

}  // namespace corrsieve
