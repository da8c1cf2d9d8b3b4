//  Copyright 2026 The semiring-lab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Scheduling helpers whose results do not depend on the worker count.

#ifndef SEMIRING_LAB_PARALLEL_HPP_
#define SEMIRING_LAB_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace semiring_lab {

/// Evaluates `task(i)` for i in [0, count) and returns the failure with the
/// smallest index, if any. Tasks are handed out in increasing order; once a
/// failure at index k is known, indices above k are skipped.
template <typename T>
std::optional<std::pair<std::size_t, T>> first_failure(
    std::size_t count, unsigned jobs,
    std::function<std::optional<T>(std::size_t)> const& task) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> bound{count};
  std::mutex mu;
  std::optional<std::pair<std::size_t, T>> best;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= bound.load()) {
        return;
      }
      std::optional<T> r;
      try {
        r = task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) {
          error = std::current_exception();
        }
        bound.store(0);
        return;
      }
      if (r) {
        std::lock_guard<std::mutex> lock(mu);
        if (!best || i < best->first) {
          best.emplace(i, std::move(*r));
          bound.store(i);
        }
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return best;
}

/// Evaluates `task(i)` for every i, results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs,
                            std::function<T(std::size_t)> const& task) {
  std::vector<std::optional<T>> slots(count);
  std::function<std::optional<char>(std::size_t)> run =
      [&](std::size_t i) -> std::optional<char> {
    slots[i] = task(i);
    return std::nullopt;
  };
  first_failure<char>(count, jobs, run);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_PARALLEL_HPP_
