#include "cubforge/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace cubforge {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CUBFORGE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(long long n, int threads, const std::function<void(long long)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (long long i = t; i < n; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace cubforge
