#pragma once

#include <cstddef>
#include <functional>

namespace mfa {

// Worker count used by parallel_for. Defaults to the hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Runs body(i) for i in [0, n). Iterations must be independent; results should
// be written to per-index slots so the outcome does not depend on scheduling.
// The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mfa
