#pragma once

// Serial and OpenMP schedules for independent indexed jobs. Both write the
// result of job i into slot i, so the output does not depend on the schedule.

#include <cstddef>
#include <vector>

namespace apolar {

enum class Schedule { Serial, Parallel };

template <class T, class Fn>
std::vector<T> run_indexed(std::size_t n, Schedule schedule, Fn&& fn) {
  std::vector<T> out(n);
  if (schedule == Schedule::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace apolar
