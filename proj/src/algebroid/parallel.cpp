#include "courant/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

#include <omp.h>

namespace courant {

namespace {

int cap_from_env() {
  const char* v = std::getenv("COURANT_KIT_THREADS");
  if (!v) return 0;
  try {
    const int n = std::stoi(v);
    return n > 0 ? n : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

int& thread_cap() {
  static int cap = cap_from_env();
  return cap;
}

}  // namespace

int thread_count() {
  const int hw = omp_get_max_threads();
  const int cap = thread_cap();
  return cap > 0 && cap < hw ? cap : hw;
}

void set_thread_cap(int threads) { thread_cap() = threads > 0 ? threads : 0; }

namespace detail {

void parallel_range(std::size_t n, void (*fn)(std::size_t, void*), void* ctx) {
  std::exception_ptr failure;
  std::mutex m;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i), ctx);
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace courant
