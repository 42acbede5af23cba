#ifndef SPECRIG_PARALLEL_HPP
#define SPECRIG_PARALLEL_HPP

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specrig {

// OpenMP parallel loop over [0, count) with per-index exception capture;
// after the loop the lowest-index exception is rethrown, so failures are
// deterministic regardless of scheduling. threads <= 0 uses the OpenMP
// default. fn writes its own output slot, keeping results order-stable.
template <class F>
void parallel_for_indexed(long count, int threads, F&& fn) {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
#else
    (void)threads;
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
#endif
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace specrig

#endif
