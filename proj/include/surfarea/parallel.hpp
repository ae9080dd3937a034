#pragma once

#include <functional>
#include <span>

namespace surfarea {

/// Sums a vector with a fixed pairwise tree.  The reduction topology depends
/// only on the length, so results are bit-identical no matter how the
/// individual slots were produced (serially or by any number of threads).
double pairwise_sum(std::span<const double> values);

/// Runs body(i) for i in [0, count).  Each index is claimed by exactly one
/// worker; workers only write to their own slots, so the caller gets the
/// same per-index results for any thread count.  Exceptions from body are
/// rethrown on the calling thread (first one wins).
void parallel_for(long count, int threads, const std::function<void(long)>& body);

}  // namespace surfarea
