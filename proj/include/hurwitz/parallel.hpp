#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace hurwitz {

// Upper bound on OpenMP worker threads used by the parallel kernels.
// Values < 1 restore the default (available cores).
void set_thread_count(int threads);
int thread_count();

// Evaluates task(i) for i in [0, count) across threads and returns the
// results in index order. Reductions over the returned vector happen
// serially, so exact results never depend on scheduling.
template <typename Task>
auto parallel_map(std::size_t count, Task&& task) -> std::vector<std::invoke_result_t<Task&, std::size_t>> {
  using Result = std::invoke_result_t<Task&, std::size_t>;
  std::vector<Result> out(count);
  std::exception_ptr failure;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = task(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hurwitz_parallel_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace hurwitz
