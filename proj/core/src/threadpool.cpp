#include "reachrl/threadpool.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>

namespace reachrl {

ThreadPool::ThreadPool(std::size_t threads) {
    const std::size_t extra = threads > 1 ? threads - 1 : 0;
    tasks_.resize(extra);
    workers_.reserve(extra);
    for (std::size_t i = 0; i < extra; ++i) {
        workers_.emplace_back([this, i] { worker_loop(i); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::unique_lock<std::mutex> lock(mutex_);
        stop_ = true;
    }
    wake_.notify_all();
    for (auto& w : workers_) w.join();
}

void ThreadPool::parallel_for(std::size_t n,
                              const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t nthreads = std::min(size(), n);
    if (nthreads <= 1) {
        fn(0, n);
        return;
    }
    // One dispatch at a time; concurrent callers queue up here. Pools of size
    // one never reach this point and stay lock-free for the caller.
    std::unique_lock<std::mutex> submit(submit_mutex_);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    {
        std::unique_lock<std::mutex> lock(mutex_);
        pending_ = 0;
        for (std::size_t t = 1; t < nthreads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) continue;
            tasks_[t - 1] = Task{&fn, begin, end};
            ++pending_;
        }
        ++generation_;
    }
    wake_.notify_all();
    fn(0, std::min(n, chunk));  // caller takes the first chunk
    std::unique_lock<std::mutex> lock(mutex_);
    done_.wait(lock, [this] { return pending_ == 0; });
}

void ThreadPool::worker_loop(std::size_t slot) {
    std::uint64_t seen = 0;
    for (;;) {
        Task task;
        {
            std::unique_lock<std::mutex> lock(mutex_);
            wake_.wait(lock, [&] { return stop_ || (generation_ != seen && tasks_[slot].fn); });
            if (stop_) return;
            seen = generation_;
            task = tasks_[slot];
            tasks_[slot].fn = nullptr;
        }
        if (task.fn) {
            (*task.fn)(task.begin, task.end);
            std::unique_lock<std::mutex> lock(mutex_);
            --pending_;
            if (pending_ == 0) done_.notify_all();
        }
    }
}

ThreadPool& ThreadPool::global() {
    static std::unique_ptr<ThreadPool> pool = [] {
        std::size_t n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
        n = std::min<std::size_t>(n, 8);
        if (const char* env = std::getenv("REACHRL_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) n = static_cast<std::size_t>(v);
        }
        return std::make_unique<ThreadPool>(n);
    }();
    return *pool;
}

}  // namespace reachrl
