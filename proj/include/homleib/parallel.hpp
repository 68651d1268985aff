#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

namespace hlb::par {

// Global execution switch. Serial mode runs every kernel on the calling
// thread; parallel mode distributes independent work items over OpenMP
// threads. Results never depend on the mode.
enum class Mode { Serial, Parallel };

void set_mode(Mode m);
Mode mode();
void set_threads(int n);  // n <= 0 restores the OpenMP default
int threads();

// Scoped override, restored on destruction.
class ModeGuard {
 public:
  explicit ModeGuard(Mode m, int nthreads = 0);
  ~ModeGuard();
  ModeGuard(const ModeGuard&) = delete;
  ModeGuard& operator=(const ModeGuard&) = delete;

 private:
  Mode saved_mode_;
  int saved_threads_;
};

namespace detail {
bool use_parallel(std::size_t n);
int team_size();
}  // namespace detail

// Calls f(i) for i in [0, n). Each index must write only to its own slot.
// If several indices throw, the exception of the smallest index is rethrown,
// so failures are reported identically in both modes.
template <class F>
void for_each_index(std::size_t n, F&& f) {
  if (!detail::use_parallel(n)) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr first;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  std::mutex m;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::team_size())
  for (long long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace hlb::par
