// Copyright 2026 VST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vst/core/parallel.h"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace vst {
namespace {

int DefaultThreads() {
  const char* det = std::getenv("VST_DETERMINISTIC");
  if (det && det[0] == '1') return 1;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_threads{0};

// Persistent pool: spawning threads per call would dominate the many small
// parallel regions inside the training step.
class Pool {
 public:
  static Pool& Instance() {
    static Pool pool;
    return pool;
  }

  void Run(int nchunks, const std::function<void(int)>& chunk_fn) {
    EnsureWorkers(nchunks - 1);
    {
      std::unique_lock<std::mutex> lk(m_);
      fn_ = &chunk_fn;
      nchunks_ = nchunks;
      next_ = 1;  // chunk 0 runs on the caller
      pending_ = nchunks - 1;
      ++epoch_;
    }
    cv_.notify_all();
    chunk_fn(0);
    std::unique_lock<std::mutex> lk(m_);
    done_cv_.wait(lk, [&] { return pending_ == 0; });
    fn_ = nullptr;
  }

 private:
  Pool() = default;
  ~Pool() {
    {
      std::unique_lock<std::mutex> lk(m_);
      stop_ = true;
      ++epoch_;
    }
    cv_.notify_all();
    for (auto& t : workers_) t.join();
  }

  void EnsureWorkers(int needed) {
    std::unique_lock<std::mutex> lk(m_);
    while (static_cast<int>(workers_.size()) < needed) {
      workers_.emplace_back([this] { WorkerLoop(); });
    }
  }

  void WorkerLoop() {
    uint64_t seen = 0;
    for (;;) {
      const std::function<void(int)>* fn = nullptr;
      int chunk = -1;
      {
        std::unique_lock<std::mutex> lk(m_);
        cv_.wait(lk, [&] { return stop_ || epoch_ != seen; });
        if (stop_) return;
        seen = epoch_;
        while (fn_ != nullptr && next_ < nchunks_) {
          chunk = next_++;
          fn = fn_;
          lk.unlock();
          (*fn)(chunk);
          lk.lock();
          if (--pending_ == 0) done_cv_.notify_all();
        }
      }
    }
  }

  std::vector<std::thread> workers_;
  std::mutex m_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(int)>* fn_ = nullptr;
  int nchunks_ = 0;
  int next_ = 0;
  int pending_ = 0;
  uint64_t epoch_ = 0;
  bool stop_ = false;
};

}  // namespace

int NumThreads() {
  int t = g_threads.load();
  if (t == 0) {
    t = DefaultThreads();
    g_threads.store(t);
  }
  return t;
}

void SetNumThreads(int n) { g_threads.store(n < 1 ? 1 : n); }

void ParallelFor(int64_t n,
                 const std::function<void(int64_t, int64_t)>& body) {
  if (n <= 0) return;
  int nt = NumThreads();
  if (nt <= 1 || n < 2) {
    body(0, n);
    return;
  }
  int nchunks = static_cast<int>(std::min<int64_t>(nt, n));
  int64_t per = (n + nchunks - 1) / nchunks;
  std::function<void(int)> chunk_fn = [&](int c) {
    int64_t lo = c * per;
    int64_t hi = std::min<int64_t>(n, lo + per);
    if (lo < hi) body(lo, hi);
  };
  Pool::Instance().Run(nchunks, chunk_fn);
}

}  // namespace vst
