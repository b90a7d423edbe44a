// Execution policy shared by the data-parallel kernels plus a small OpenMP
// batch driver. Every kernel produces bit-identical output under both
// policies; Serial is the reference path the tests compare against.
#pragma once

#include <exception>
#include <mutex>

#include <omp.h>

namespace alphatree {

enum class Exec { Serial, Parallel };

/// Runs fn(0..count-1), in parallel under the Parallel policy. Exceptions
/// from workers are captured and rethrown once on the calling thread.
template <class Fn>
void parallel_for(long long count, Fn&& fn, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr err;
  std::mutex err_mu;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace alphatree
