#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace maxlpa {

/// Fixed-size pool that executes blocking parallel loops.
///
/// parallel_for splits [0, count) into contiguous chunks that the workers
/// and the calling thread claim in turn. Which thread runs a chunk is
/// unspecified, so callers must write results into per-index slots; under
/// that discipline results do not depend on the thread count. A pool of
/// size 1 runs everything inline on the caller.
class WorkerPool {
 public:
  using RangeFn = std::function<void(std::size_t begin, std::size_t end)>;

  /// threads == 0 selects std::thread::hardware_concurrency().
  explicit WorkerPool(std::size_t threads = 1);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const noexcept { return workers_.size() + 1; }

  /// Blocks until fn has covered [0, count). The first exception thrown by
  /// any chunk is rethrown here after all chunks finish.
  void parallel_for(std::size_t count, const RangeFn& fn, std::size_t grain = 1);

 private:
  void worker_loop();
  void drain();

  std::vector<std::jthread> workers_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;

  // Current job; guarded by mutex_.
  const RangeFn* job_ = nullptr;
  std::size_t count_ = 0;
  std::size_t chunk_ = 1;
  std::size_t next_ = 0;
  std::size_t active_ = 0;
  bool stopping_ = false;
  std::exception_ptr error_;
};

}  // namespace maxlpa
