#pragma once

// Grid sweeps over distance points. Every physics evaluation is a pure
// function of its arguments, so grids parallelize point-wise; the OpenMP
// kernel and the serial reference produce identical output (same arithmetic
// per point, deterministic ordering by grid index).

#include <functional>
#include <stdexcept>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace polder {

std::vector<double> make_grid(double lo, double hi, int points,
                              bool log_spaced);

inline int hardware_jobs() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Serial reference kept for testing and benchmarking.
template <class F>
std::vector<double> map_grid_serial(const std::vector<double>& xs, F&& f) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}

// OpenMP kernel; jobs <= 0 uses the OpenMP default. Exceptions from worker
// iterations are captured and rethrown after the loop.
template <class F>
std::vector<double> map_grid(const std::vector<double>& xs, F&& f,
                             int jobs = 0) {
    std::vector<double> out(xs.size());
#if defined(_OPENMP)
    std::exception_ptr error;
    const int n = (int)xs.size();
#pragma omp parallel for schedule(dynamic) num_threads( \
    jobs > 0 ? jobs : omp_get_max_threads())
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = f(xs[i]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
#else
    (void)jobs;
    return map_grid_serial(xs, f);
#endif
}

}  // namespace polder
