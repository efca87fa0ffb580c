#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

namespace cflab {

// Worker cap: CF_LAB_THREADS when set, otherwise hardware concurrency
// clamped to 8.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("CF_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), 64);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<std::size_t>(hw == 0 ? 1 : hw, 1, 8);
}

// Minimum of f over an inclusive equispaced grid, evaluated in parallel
// chunks.  The reduction is order-independent (min with smallest-x tie
// break), so the result is deterministic regardless of the worker count.
template <class F>
std::pair<double, double> grid_min(F&& f, double lo, double hi, std::size_t n) {
  const std::size_t workers = std::min(worker_count(), n / 1024 + 1);
  std::vector<std::pair<double, double>> local(workers,
                                               {lo, std::numeric_limits<double>::infinity()});
  auto run = [&](std::size_t w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    double best_x = lo;
    double best_v = std::numeric_limits<double>::infinity();
    for (std::size_t i = begin; i <= end && i <= n; ++i) {
      const double x =
          (i == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
      const double v = f(x);
      if (v < best_v || (v == best_v && x < best_x)) {
        best_v = v;
        best_x = x;
      }
    }
    local[w] = {best_x, best_v};
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  auto best = local[0];
  for (const auto& cand : local) {
    if (cand.second < best.second ||
        (cand.second == best.second && cand.first < best.first)) {
      best = cand;
    }
  }
  return best;
}

}  // namespace cflab
