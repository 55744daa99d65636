#include "triglab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace triglab::fft {

namespace {

// planning is not thread safe in fftw, execution on distinct arrays is
std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> plans;

fftw_plan get_plan(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    auto* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans.emplace(key, p);
    return p;
}

void run(cvec& a, int sign) {
    if (a.size() <= 1) return;
    fftw_plan p = get_plan(a.size(), sign);
    auto* d = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(p, d, d);
}

}  // namespace

void forward(cvec& a) { run(a, FFTW_FORWARD); }
void inverse(cvec& a) { run(a, FFTW_BACKWARD); }

}  // namespace triglab::fft
