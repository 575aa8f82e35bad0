#pragma once

// Deterministic parallel map over fixed-size chunks of an index range. The
// chunking does not depend on the worker count, so reducing the returned
// partials in order gives the same bits for any number of threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace slh {

/// Worker count: the value set by set_thread_count, else the SLH_THREADS
/// environment variable, else the hardware concurrency.
int thread_count();
/// 0 restores the environment/hardware default.
void set_thread_count(int threads);

/// splitmix64 finalizer; used to derive independent RNG seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

template <class Partial, class Fn>
std::vector<Partial> chunked_map(std::int64_t count, std::int64_t chunk, Fn&& fn) {
  if (count <= 0) return {};
  chunk = std::max<std::int64_t>(chunk, 1);
  const std::int64_t chunks = (count + chunk - 1) / chunk;
  std::vector<Partial> out(static_cast<std::size_t>(chunks));
  const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), chunks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::int64_t begin = c * chunk;
        out[static_cast<std::size_t>(c)] = fn(begin, std::min(count, begin + chunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace slh
