#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace symrep {

/// Evaluation limits shared by the enumeration-heavy operations.
struct Limits {
  /// Largest number of summands or enumerated candidates an operation may
  /// visit before refusing with CapExceeded.
  std::uint64_t enumeration_cap = 10'000'000;
  /// Worker threads; results never depend on this value.
  unsigned workers = 1;
};

/// Splits [0, count) into contiguous chunks, runs `body(begin, end)` on
/// up to `workers` threads and returns the per-chunk results in chunk order.
/// Exceptions from a worker are rethrown on the calling thread.
template <typename Result, typename Body>
std::vector<Result> run_chunked(std::size_t count, unsigned workers, Body body) {
  const std::size_t n = std::max<std::size_t>(
      1, std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(count, 1)));
  std::vector<Result> results(n);
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t slot) {
    const std::size_t begin = count * slot / n;
    const std::size_t end = count * (slot + 1) / n;
    try {
      results[slot] = body(begin, end);
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  };
  if (n == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n);
    for (std::size_t slot = 0; slot < n; ++slot) threads.emplace_back(run, slot);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace symrep
