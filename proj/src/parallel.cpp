#include "hurwitz/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace hurwitz {
namespace {

std::atomic<int> configured_threads{0};

}  // namespace

void set_thread_count(int threads) { configured_threads = threads < 1 ? 0 : threads; }

int thread_count() {
  int threads = configured_threads.load();
  return threads > 0 ? threads : omp_get_max_threads();
}

}  // namespace hurwitz
