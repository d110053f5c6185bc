#pragma once

#include <cstddef>
#include <functional>

namespace zj {

// Worker count from ZJONES_THREADS, else hardware concurrency; always >= 1.
int thread_count();

// Runs body(i) for i in [0, n). Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace zj
