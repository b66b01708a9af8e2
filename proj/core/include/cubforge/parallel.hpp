#pragma once

// Minimal deterministic fork-join helper.  Work items are indexed; results
// land in index order, so output never depends on the worker count.

#include <functional>

namespace cubforge {

// Thread count resolution: explicit argument > CUBFORGE_THREADS > hardware.
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, n) on `threads` workers (interleaved static
// schedule).  fn must only write to per-index state.
void parallel_for(long long n, int threads, const std::function<void(long long)>& fn);

}  // namespace cubforge
