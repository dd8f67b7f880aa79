#pragma once

#include <cstddef>
#include <functional>

namespace lrc::lab {

/// Runs fn(0..n-1) on up to `threads` workers (0 = hardware concurrency).
/// Tasks are claimed in index order; the first exception is rethrown after
/// every worker has stopped.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

[[nodiscard]] std::size_t default_threads();

}  // namespace lrc::lab
