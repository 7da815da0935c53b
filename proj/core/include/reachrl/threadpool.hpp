#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace reachrl {

/// Fixed-size worker pool for data-parallel loops. Work is partitioned into
/// contiguous index ranges, one per worker, and each output element is written
/// by exactly one worker in a fixed order, so results are bit-identical for
/// any pool size (including 1, where the loop runs inline on the caller).
class ThreadPool {
  public:
    explicit ThreadPool(std::size_t threads);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    std::size_t size() const { return workers_.size() + 1; }

    /// Runs fn(begin, end) over a partition of [0, n). Blocks until done.
    void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

    /// Process-wide pool sized from the REACHRL_THREADS environment variable
    /// (default: hardware concurrency, capped at 8). Built on first use.
    static ThreadPool& global();

  private:
    void worker_loop(std::size_t slot);

    struct Task {
        const std::function<void(std::size_t, std::size_t)>* fn = nullptr;
        std::size_t begin = 0;
        std::size_t end = 0;
    };

    std::vector<std::thread> workers_;
    std::vector<Task> tasks_;
    std::mutex submit_mutex_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    std::size_t pending_ = 0;
    std::uint64_t generation_ = 0;
    bool stop_ = false;
};

}  // namespace reachrl
