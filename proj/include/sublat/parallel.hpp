#ifndef SUBLAT_PARALLEL_HPP_
#define SUBLAT_PARALLEL_HPP_

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace sublat {

//! Runs fn(0..count-1), splitting the indices over up to `threads` worker
//! threads. Each index is processed exactly once and fn must only touch
//! per-index state, so results never depend on the thread count.
inline void parallel_for(int count, int threads, std::function<void(int)> const& fn) {
  if (count <= 0) {
    return;
  }
  if (threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  threads = std::min(threads, count);
  std::atomic<int>         next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace sublat

#endif  // SUBLAT_PARALLEL_HPP_
