// Deterministic accumulation helpers.  Parallel loops store per-index
// results first and then combine them with a serial pairwise tree, so the
// floating-point result is independent of scheduling and thread count.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gl3 {

// Serial pairwise (binary tree) summation; bitwise reproducible for a given
// input order and much better conditioned than a left fold.
template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  std::function<T(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) -> T {
    if (hi - lo <= 4) {
      T s{};
      for (std::size_t i = lo; i < hi; ++i) s += v[i];
      return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  if (v.empty()) return T{};
  return rec(0, v.size());
}

// Runs fn(i) for i in [0, n) across hardware threads.  fn must only write to
// its own index's slot in caller-owned storage; determinism then follows from
// combining the slots serially afterwards.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned max_threads = 0) {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned nthreads = max_threads ? std::min(max_threads, hw ? hw : 1u) : (hw ? hw : 1u);
  if (nthreads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gl3
