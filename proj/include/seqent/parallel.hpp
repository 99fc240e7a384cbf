#ifndef SEQENT_PARALLEL_HPP
#define SEQENT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace seqent::util {

/// Runs body(i) for i in [0, count). Work items must be independent; callers
/// write results into index-addressed slots so the output is identical
/// whether the loop runs inline or across threads.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
  if (workers <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace seqent::util

#endif  // SEQENT_PARALLEL_HPP
