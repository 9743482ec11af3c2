#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace rumin {

/// Worker count from RUMIN_LAB_THREADS, else 1.
inline unsigned worker_count() {
  const char* env = std::getenv("RUMIN_LAB_THREADS");
  if (!env || !*env) return 1;
  try {
    const long v = std::stol(env);
    return v < 1 ? 1u : static_cast<unsigned>(v);
  } catch (const std::exception&) {
    return 1;
  }
}

/// Runs every task and returns results in task order, regardless of scheduling.
template <class R>
std::vector<R> run_ordered(const std::vector<std::function<R()>>& tasks, unsigned workers = worker_count()) {
  std::vector<R> out(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned k = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace rumin
