#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mapcount::detail {

// Runs fn(i) for every i in [0, count) on up to `threads` workers, striding the
// index space. An exception does not stop the other indices; once all have run,
// the exception from the lowest failing index is rethrown, so the outcome and
// the set of completed indices do not depend on the worker count.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  std::size_t error_index = count;
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run_one = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace mapcount::detail
