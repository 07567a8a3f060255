#pragma once

#include <cstddef>
#include <functional>

namespace mfa {

/// Worker count: MFA_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads in contiguous
/// chunks. The first exception thrown by any chunk is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mfa
