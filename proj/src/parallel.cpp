#include "homleib/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace hlb::par {

namespace {
std::atomic<Mode> g_mode{Mode::Parallel};
std::atomic<int> g_threads{0};
}  // namespace

void set_mode(Mode m) { g_mode.store(m); }
Mode mode() { return g_mode.load(); }
void set_threads(int n) { g_threads.store(n > 0 ? n : 0); }
int threads() {
  int n = g_threads.load();
  return n > 0 ? n : omp_get_max_threads();
}

ModeGuard::ModeGuard(Mode m, int nthreads)
    : saved_mode_(mode()), saved_threads_(g_threads.load()) {
  set_mode(m);
  if (nthreads > 0) set_threads(nthreads);
}

ModeGuard::~ModeGuard() {
  set_mode(saved_mode_);
  g_threads.store(saved_threads_);
}

namespace detail {

bool use_parallel(std::size_t n) {
  // Nested regions would oversubscribe; the outermost kernel owns the team.
  return n > 1 && mode() == Mode::Parallel && threads() > 1 && !omp_in_parallel();
}

int team_size() { return threads(); }

}  // namespace detail

}  // namespace hlb::par
