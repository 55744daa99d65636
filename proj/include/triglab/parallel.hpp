#pragma once

#include <cstddef>
#include <vector>

namespace triglab::par {

// reads TRIGLAB_THREADS once and caps the OpenMP team size
void apply_thread_env();
int max_threads();

// Sum of f(begin, end) over fixed chunks of [0, n). Chunks may run on any
// thread; partials are added in chunk order so the result does not depend
// on the team size.
template <class F>
double chunked_sum(std::size_t n, std::size_t chunk, F&& f) {
    if (n == 0) return 0.0;
    if (chunk == 0) chunk = 1;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> part(nchunks, 0.0);
    const long long nc = static_cast<long long>(nchunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < nc; ++c) {
        const std::size_t b = static_cast<std::size_t>(c) * chunk;
        const std::size_t e = b + chunk < n ? b + chunk : n;
        part[static_cast<std::size_t>(c)] = f(b, e);
    }
    double s = 0.0;
    for (double v : part) s += v;
    return s;
}

}  // namespace triglab::par
