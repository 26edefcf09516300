#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace amrseq {

// Applies fn(item, index) across items on up to `jobs` threads. Results come
// back in input order no matter how the work interleaves, so callers see
// identical output for any job count. The first exception wins and is
// rethrown after all workers stop.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, int jobs, Fn fn)
    -> std::vector<decltype(fn(items[0], std::size_t{0}))> {
  using Out = decltype(fn(items[0], std::size_t{0}));
  if (jobs < 1) jobs = 1;
  std::size_t workers = static_cast<std::size_t>(jobs);
  if (workers > items.size()) workers = items.size();

  if (workers <= 1) {
    std::vector<Out> results;
    results.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      results.push_back(fn(items[i], i));
    }
    return results;
  }

  std::vector<std::optional<Out>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(fn(items[i], i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& thread : threads) thread.join();

  if (error) std::rethrow_exception(error);
  std::vector<Out> results;
  results.reserve(items.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace amrseq
