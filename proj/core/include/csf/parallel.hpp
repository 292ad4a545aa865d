#pragma once

#include <cstddef>
#include <functional>

namespace csf {

// Worker count for fan-out loops: CSF_THREADS when set (>= 1), otherwise
// the hardware concurrency.
unsigned worker_count();

// Runs f(0..n-1) across workers. Callers store results by index, so the
// outcome is identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace csf
