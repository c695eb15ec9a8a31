#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace corrsieve {

// Neumaier compensated accumulator; keeps sums reproducible to ~1e-16
// relative regardless of term ordering inside a chunk.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void set_thread_count(int n);
int thread_count();

inline constexpr uint64_t kDefaultChunk = uint64_t{1} << 16;

// Maps fn over fixed-size chunks of [lo, hi] and returns the per-chunk
// results in chunk order. The chunk grid depends only on chunk_size, never
// on the thread count, so a sequential fold of the results is deterministic.
template <class Part, class Fn>
std::vector<Part> map_chunks(uint64_t lo, uint64_t hi, Fn fn,
                             uint64_t chunk_size = kDefaultChunk) {
  if (hi < lo) return {};
  const size_t nchunks = static_cast<size_t>((hi - lo) / chunk_size) + 1;
  std::vector<Part> out(nchunks);
  auto run_chunk = [&](size_t i) {
    uint64_t clo = lo + i * chunk_size;
    uint64_t chi = std::min(hi, clo + chunk_size - 1);
    out[i] = fn(clo, chi);
  };
  const int nthreads = thread_count();
  if (nthreads <= 1 || nchunks == 1) {
    for (size_t i = 0; i < nchunks; ++i) run_chunk(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < nchunks; i = next.fetch_add(1))
        run_chunk(i);
    };
    std::vector<std::thread> pool;
    size_t use = std::min<size_t>(static_cast<size_t>(nthreads), nchunks);
    pool.reserve(use);
    for (size_t i = 0; i < use; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace corrsieve
