#pragma once

#include <cstddef>
#include <functional>

namespace su3cd {

/// Worker-pool width: explicit request, else the SU3CD_THREADS environment
/// variable, else hardware concurrency.
unsigned resolve_thread_count(unsigned requested = 0);

/// Runs fn(0) .. fn(count-1) across a worker pool. Indices are claimed from an
/// atomic counter; callers get determinism by writing results into per-index
/// slots. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace su3cd
