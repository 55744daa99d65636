#include "triglab/ingham.hpp"
#include "triglab/nazarov.hpp"
#include "triglab/norms.hpp"
#include "triglab/sampling.hpp"
#include "triglab/trigpoly.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace triglab;

namespace {

TrigPoly random_poly(std::size_t n, bool harmonic, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> f;
    std::vector<cplx> a;
    double x = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        f.push_back(x);
        x += harmonic ? 1.0 + std::floor(3.0 * u(rng)) : 1.0 + u(rng);
        a.emplace_back(u(rng) - 0.5, u(rng) - 0.5);
    }
    return TrigPoly(f, a);
}

void BM_abs_pow_mean(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), false, 1);
    for (auto _ : st) benchmark::DoNotOptimize(sampling::abs_pow_mean(P, -1.0, 2.0 / 65536, 65536, 1.0));
}

void BM_abs_pow_mean_serial(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), false, 1);
    for (auto _ : st) benchmark::DoNotOptimize(sampling::abs_pow_mean_serial(P, -1.0, 2.0 / 65536, 65536, 1.0));
}

void BM_harmonic_fft(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), true, 2);
    const std::size_t n = sampling::harmonic_block(P) * 64;
    for (auto _ : st) benchmark::DoNotOptimize(sampling::harmonic_abs_pow_mean(P, n, 1.0));
}

void BM_harmonic_serial(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), true, 2);
    const std::size_t n = sampling::harmonic_block(P) * 64;
    for (auto _ : st) benchmark::DoNotOptimize(sampling::harmonic_abs_pow_mean_serial(P, n, 1.0));
}

void BM_gram_eigen(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), false, 3);
    for (auto _ : st) benchmark::DoNotOptimize(eigen_range(gram(P.freqs(), 1.5)));
}

void BM_l1_certified(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), true, 4);
    for (auto _ : st) benchmark::DoNotOptimize(l1_certified(P, {0.0, 1.0, true}, 1e-3).value);
}

// the O(n^2) interference sums behind alpha_emp dominate for larger n
void BM_nazarov_build(benchmark::State& st) {
    auto P = random_poly(static_cast<std::size_t>(st.range(0)), false, 5);
    for (auto _ : st) benchmark::DoNotOptimize(build_dual_nazarov(P, 0.5).certified_bound);
}

}  // namespace

BENCHMARK(BM_abs_pow_mean)->Arg(16)->Arg(64);
BENCHMARK(BM_abs_pow_mean_serial)->Arg(16)->Arg(64);
BENCHMARK(BM_harmonic_fft)->Arg(32)->Arg(256);
BENCHMARK(BM_harmonic_serial)->Arg(32);
BENCHMARK(BM_gram_eigen)->Arg(20)->Arg(80);
BENCHMARK(BM_l1_certified)->Arg(64);
BENCHMARK(BM_nazarov_build)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
