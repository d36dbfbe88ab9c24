// Copyright 2026 The cmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace cmatch {

inline constexpr std::size_t kMaxListedFailures = 20;

struct Failure {
  std::uint64_t index = 0;
  std::string what;
  // Offending instance in graph file format, when there is one.
  std::string graph;
};

// Counters for one slice of an index space. Slices merge in index order,
// so the result does not depend on how the space was split.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<Failure> failures;

  void count(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }

  void fail(std::uint64_t index, std::string what, std::string graph = {}) {
    ++failure_count;
    if (failures.size() < kMaxListedFailures)
      failures.push_back({index, std::move(what), std::move(graph)});
  }

  void merge(Tally&& other) {
    checked += other.checked;
    failure_count += other.failure_count;
    for (auto& [k, v] : other.counts) counts[k] += v;
    for (auto& f : other.failures)
      if (failures.size() < kMaxListedFailures) failures.push_back(std::move(f));
  }
};

// Runs fn(i, tally) for every i in [0, total), split into `jobs` contiguous
// ranges on separate threads.
template <class Fn>
Tally parallel_tally(std::uint64_t total, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  const std::uint64_t parts = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs),
                                                      std::max<std::uint64_t>(total, 1));
  std::vector<Tally> slices(parts);
  std::vector<std::exception_ptr> errors(parts);
  auto run = [&](std::uint64_t p) {
    const std::uint64_t lo = total * p / parts, hi = total * (p + 1) / parts;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i, slices[p]);
    } catch (...) {
      errors[p] = std::current_exception();
    }
  };
  if (parts == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t p = 0; p < parts; ++p) pool.emplace_back(run, p);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally out;
  for (auto& s : slices) out.merge(std::move(s));
  return out;
}

}  // namespace cmatch
