#include "maxlpa/worker_pool.hpp"

#include <algorithm>
#include <utility>

namespace maxlpa {

WorkerPool::WorkerPool(std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  workers_.reserve(threads - 1);
  for (std::size_t i = 1; i < threads; ++i) {
    workers_.emplace_back([this] { worker_loop(); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
}

void WorkerPool::parallel_for(std::size_t count, const RangeFn& fn, std::size_t grain) {
  if (count == 0) return;
  grain = std::max<std::size_t>(grain, 1);
  if (workers_.empty() || count <= grain) {
    fn(0, count);
    return;
  }

  {
    std::lock_guard lock(mutex_);
    job_ = &fn;
    count_ = count;
    chunk_ = std::max(grain, count / (size() * 4));
    next_ = 0;
    error_ = nullptr;
  }
  wake_.notify_all();
  drain();

  std::exception_ptr error;
  {
    std::unique_lock lock(mutex_);
    done_.wait(lock, [this] { return next_ >= count_ && active_ == 0; });
    job_ = nullptr;
    error = std::exchange(error_, nullptr);
  }
  if (error) std::rethrow_exception(error);
}

void WorkerPool::drain() {
  std::unique_lock lock(mutex_);
  while (job_ != nullptr && next_ < count_) {
    const std::size_t begin = next_;
    const std::size_t end = std::min(count_, begin + chunk_);
    next_ = end;
    ++active_;
    const RangeFn* fn = job_;
    lock.unlock();
    try {
      (*fn)(begin, end);
    } catch (...) {
      std::lock_guard error_lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
    lock.lock();
    --active_;
    if (next_ >= count_ && active_ == 0) done_.notify_all();
  }
}

void WorkerPool::worker_loop() {
  std::unique_lock lock(mutex_);
  while (true) {
    wake_.wait(lock, [this] { return stopping_ || (job_ != nullptr && next_ < count_); });
    if (stopping_) return;
    lock.unlock();
    drain();
    lock.lock();
  }
}

}  // namespace maxlpa
