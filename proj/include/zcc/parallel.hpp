#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zcc {

inline std::uint64_t slice_count(std::uint64_t count, unsigned workers) {
  return std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(1u, workers), count));
}

/// Splits [0, count) into slice_count(count, workers) contiguous slices and
/// runs `body(slice, begin, end)` for each, one thread per slice. Exceptions
/// from any slice are rethrown after all threads join.
template <class Body>
void parallel_for(std::uint64_t count, unsigned workers, Body body) {
  const std::uint64_t slices = slice_count(count, workers);
  if (slices == 1) {
    body(std::uint64_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(slices);
  {
    std::vector<std::jthread> pool;
    pool.reserve(slices);
    for (std::uint64_t w = 0; w < slices; ++w) {
      std::uint64_t begin = count * w / slices;
      std::uint64_t end = count * (w + 1) / slices;
      pool.emplace_back([&, w, begin, end] {
        try {
          body(w, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Sum of `body(begin, end)` over the slices. Integer sums make the total
/// independent of how the range was split.
template <class Body>
std::uint64_t parallel_sum(std::uint64_t count, unsigned workers, Body body) {
  std::vector<std::uint64_t> partial(slice_count(count, workers), 0);
  parallel_for(count, workers, [&](std::uint64_t slice, std::uint64_t begin, std::uint64_t end) {
    partial[slice] = begin < end ? body(begin, end) : 0;
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

/// Number of workers to use when the caller does not say.
inline unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace zcc
