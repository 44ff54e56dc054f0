#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace screwcal {

/// Worker count: explicit request, else SCREWCAL_THREADS, else hardware.
int resolve_thread_count(int requested = 0);

/// Runs fn(i) for i in [0, n) on up to `threads` workers (block partition).
/// Callers own determinism: workers must write to disjoint slots.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Pairwise summation; deterministic for a fixed input order regardless of
/// thread count, and accurate to O(log n) rounding.
double pairwise_sum(std::span<const double> values);

}  // namespace screwcal
