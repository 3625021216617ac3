#include "kmodal/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "kmodal/error.hpp"

namespace kmodal {

std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0)
    return requested;
  if (const char* env = std::getenv("KMODAL_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v < 0)
        throw ConfigError("KMODAL_THREADS must be >= 0");
      if (v > 0)
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw ConfigError(std::string("KMODAL_THREADS is not an integer: ") + env);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count)
        return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t n = std::min(threads, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    pool.emplace_back(worker);
  pool.clear();
  if (error)
    std::rethrow_exception(error);
}

} // namespace kmodal
