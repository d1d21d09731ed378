#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace steklov {

// Worker count: STEKLOV_THREADS if set, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n). Chunks are claimed dynamically but every
// result is indexed by i, so callers that write to slot i stay deterministic.
// The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace steklov
