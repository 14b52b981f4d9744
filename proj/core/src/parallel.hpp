#pragma once

#include <cstddef>
#include <functional>

namespace gapnn::detail {

/// Worker count for internally parallelized scans: the GAPNN_THREADS
/// environment variable when set to a positive integer, otherwise
/// std::thread::hardware_concurrency(). Never less than 1. Read on every
/// call so tests can flip it at runtime.
std::size_t thread_budget();

/// Splits [0, n) into at most `max_threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) for each, chunk 0 on the calling thread.
/// Exceptions are rethrown on the caller, lowest chunk first. Callers own
/// determinism: merge per-chunk results in chunk order.
void parallel_chunks(std::size_t n, std::size_t max_threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

} // namespace gapnn::detail
