// semigaps - gap-structure analytics for numerical semigroups

#ifndef SEMIGAPS_PARALLEL_HPP_
#define SEMIGAPS_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semigaps::detail {

  // Calls fn(i) for every i in [0, n) on up to `threads` workers. Work items
  // are handed out dynamically; callers write results into slot i so the
  // output does not depend on scheduling. The first exception thrown by any
  // worker is rethrown on the calling thread.
  template <typename Fn>
  void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    unsigned const workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1U), n));
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool>        failed{false};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     work = [&] {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed = true;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace semigaps::detail

#endif  // SEMIGAPS_PARALLEL_HPP_
