#pragma once

#include <cstddef>

namespace courant {

enum class Execution { Serial, Parallel };

/// Threads used by Execution::Parallel; COURANT_KIT_THREADS caps it when set.
int thread_count();
void set_thread_cap(int threads);

namespace detail {
void parallel_range(std::size_t n, void (*fn)(std::size_t, void*), void* ctx);
}

/// Runs fn(0..n-1). Iterations must write disjoint outputs; ordering of the
/// results is then independent of the schedule.
template <class Fn>
void for_each_index(std::size_t n, Execution mode, Fn&& fn) {
  if (mode == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  detail::parallel_range(n, [](std::size_t i, void* c) { (*static_cast<Fn*>(c))(i); }, &fn);
}

}  // namespace courant
