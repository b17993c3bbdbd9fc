#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace qons {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs fn(state, job) for every job from a shared queue. Each worker owns a
/// state made by make_state(). Results come back in job order; the first
/// exception (in job order) is rethrown.
template <class Result, class Job, class MakeState, class Fn>
std::vector<Result> run_queue(const std::vector<Job>& jobs, MakeState make_state, Fn fn, unsigned threads = 0) {
  if (threads == 0) threads = default_threads();
  if (threads > jobs.size()) threads = static_cast<unsigned>(jobs.empty() ? 1 : jobs.size());
  std::vector<Result> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    auto state = make_state();
    for (size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = fn(state, jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace qons
