/*
 * Copyright 2026 The lsa-coord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lsa::sim {

/// Worker count to use when the caller asks for 0 ("all cores").
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(task, worker) for task in [0, n_tasks) on `workers` threads.
/// Tasks are handed out dynamically; results must be written to
/// task-indexed storage so the outcome does not depend on scheduling.
/// The first exception thrown by any task is rethrown after all workers
/// have stopped.
template <typename Fn>
void parallel_for(std::size_t n_tasks, unsigned workers, Fn&& fn) {
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(n_tasks, 1)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) fn(t, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        const std::size_t t = next.fetch_add(1);
        if (t >= n_tasks) return;
        try {
          fn(t, w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Kahan-compensated running sum.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Mean and standard error from a sample of `n` values, built from
/// compensated sums of values and squared values.
struct SampleMoments {
  KahanSum sum;
  KahanSum sum_sq;
  std::size_t n = 0;

  void add(double v) {
    sum.add(v);
    sum_sq.add(v * v);
    ++n;
  }
  void merge(const SampleMoments& o) {
    sum.add(o.sum.value());
    sum_sq.add(o.sum_sq.value());
    n += o.n;
  }
  double mean() const { return n ? sum.value() / static_cast<double>(n) : 0.0; }
  double std_error() const;
};

}  // namespace lsa::sim
