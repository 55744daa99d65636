#include "triglab/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace triglab::par {

void apply_thread_env() {
    const char* s = std::getenv("TRIGLAB_THREADS");
    if (!s || !*s) return;
    try {
        int n = std::stoi(s);
        if (n >= 1) omp_set_num_threads(n);
    } catch (...) {
        // ignore garbage, keep the OpenMP default
    }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace triglab::par
