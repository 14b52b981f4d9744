#include "parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace gapnn::detail {

std::size_t thread_budget() {
  if (const char* env = std::getenv("GAPNN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_chunks(std::size_t n, std::size_t max_threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t chunks = std::min(max_threads > 0 ? max_threads : 1, n);
  if (chunks == 1) {
    fn(0, 0, n);
    return;
  }

  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks - 1);

  std::size_t begin = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ranges(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    ranges[c] = {begin, begin + len};
    begin += len;
  }

  for (std::size_t c = 1; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        fn(c, ranges[c].first, ranges[c].second);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  try {
    fn(0, ranges[0].first, ranges[0].second);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : threads) t.join();

  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace gapnn::detail
