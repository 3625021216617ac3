#pragma once

#include <cstddef>
#include <functional>

namespace kmodal {

/// Worker count: `requested` if nonzero, else KMODAL_THREADS if set and
/// nonzero, else the hardware concurrency (at least 1).
std::size_t resolve_threads(std::size_t requested = 0);

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

} // namespace kmodal
