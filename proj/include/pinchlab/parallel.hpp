#pragma once

#include <cstddef>
#include <functional>

namespace pinchlab {

// Worker-thread cap: PINCHLAB_THREADS when set (>= 1), else hardware
// concurrency.
unsigned max_threads();

// Runs fn(i) for i in [0, n). Work is distributed dynamically; callers keep
// determinism by writing results into index i of a pre-sized container.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace pinchlab
