#include "gen.hpp"
#include "triglab/error.hpp"
#include "triglab/mps.hpp"
#include "triglab/norms.hpp"
#include "triglab/numeric.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace triglab;

namespace {

// O(G^2) reference: keep k = 0 and G/2, double 0 < k < G/2
std::vector<cplx> completion_oracle(const std::vector<double>& x) {
    const std::size_t G = x.size();
    std::vector<cplx> X(G, 0.0), y(G, 0.0);
    for (std::size_t k = 0; k < G; ++k)
        for (std::size_t p = 0; p < G; ++p) X[k] += x[p] * std::polar(1.0, -2.0 * pi * double(k * p % G) / double(G));
    for (std::size_t p = 0; p < G; ++p) {
        cplx s = X[0] + X[G / 2] * std::polar(1.0, pi * double(p));
        for (std::size_t k = 1; k < G / 2; ++k) s += 2.0 * X[k] * std::polar(1.0, 2.0 * pi * double(k * p % G) / double(G));
        y[p] = s / double(G);
    }
    return y;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

TrigPoly random_instance(gen::Rng& rng, std::size_t n, std::int64_t hi) {
    return TrigPoly(gen::int_freqs(rng, n, 0, hi), gen::coeffs(rng, n));
}

}  // namespace

TEST(AnalyticCompletion, Examples) {
    auto c = analytic_completion(std::vector<double>(8, 2.5));
    for (auto z : c) EXPECT_NEAR(std::abs(z - cplx(2.5, 0)), 0.0, 1e-15);
    std::vector<double> cs(16);
    for (std::size_t p = 0; p < 16; ++p) cs[p] = std::cos(2.0 * pi * double(p) / 16.0);
    auto e = analytic_completion(cs);
    for (std::size_t p = 0; p < 16; ++p) EXPECT_NEAR(std::abs(e[p] - std::polar(1.0, 2.0 * pi * double(p) / 16.0)), 0.0, 1e-14);
    std::vector<double> ab(64);
    for (std::size_t p = 0; p < 64; ++p) ab[p] = std::fabs(std::cos(2.0 * pi * double(p) / 64.0));
    auto h = analytic_completion(ab);
    auto ref = completion_oracle(ab);
    for (std::size_t p = 0; p < 64; ++p) {
        EXPECT_NEAR(h[p].real(), ab[p], 1e-14);
        EXPECT_NEAR(std::abs(h[p] - ref[p]), 0.0, 1e-12);
    }
}

TEST(AnalyticCompletion, RandomOneSided) {
    gen::Rng rng(61);
    for (std::size_t G : {8u, 32u, 128u}) {
        std::vector<double> x(G);
        for (auto& v : x) v = gen::uniform(rng, -1, 1);
        auto h = analytic_completion(x);
        auto ref = completion_oracle(x);
        fft::cvec spec = h;
        fft::forward(spec);
        for (std::size_t p = 0; p < G; ++p) {
            EXPECT_NEAR(h[p].real(), x[p], 1e-13);
            EXPECT_NEAR(std::abs(h[p] - ref[p]), 0.0, 1e-12);
        }
        for (std::size_t k = G / 2 + 1; k < G; ++k) EXPECT_NEAR(std::abs(spec[k]), 0.0, 1e-11);
    }
    EXPECT_EQ(kind_of([] { analytic_completion(std::vector<double>(12, 1.0)); }), ErrorKind::BadGridSize);
    EXPECT_EQ(kind_of([] { analytic_completion(std::vector<double>(4, 1.0)); }), ErrorKind::BadGridSize);
}

TEST(BuildDual, SingleTerm) {
    auto P = make({5}, {1.0});
    auto c = build_dual(P);
    EXPECT_DOUBLE_EQ(c.S, 1.0);
    EXPECT_NEAR(c.sup_T1, 1.0, 1e-12);
    ASSERT_EQ(c.deviations.size(), 1u);
    EXPECT_NEAR(c.deviations[0], 0.0, 1e-12);
    EXPECT_NEAR(c.certified_bound, 0.5, 1e-12);
    EXPECT_TRUE(c.pass);
    auto v = verify_certificate(c, P);
    EXPECT_NEAR(v.l1_value, 1.0, 1e-12);
}

TEST(BuildDual, BlockCoefficients) {
    auto P = make({0, 1, 2}, {1.0, 1.0, 1.0});
    auto c = build_dual(P);
    std::vector<std::pair<std::int64_t, cplx>> t0;
    for (auto& b : c.blocks)
        for (std::size_t i = 0; i < b.freqs.size(); ++i) t0.emplace_back(b.freqs[i], b.coeffs[i]);
    ASSERT_EQ(t0.size(), 3u);
    std::sort(t0.begin(), t0.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(t0[k].first, static_cast<std::int64_t>(k));
        EXPECT_NEAR(std::abs(t0[k].second), 1.0 / double(k + 1), 1e-15);
    }
    // blocks partition by k+1 in [2^j, 2^{j+1})
    for (auto& b : c.blocks)
        for (auto k : b.indices) {
            EXPECT_GE(k + 1, std::size_t(1) << b.j);
            EXPECT_LT(k + 1, std::size_t(2) << b.j);
        }
    EXPECT_NEAR(c.S, 1.0 + 0.5 + 1.0 / 3.0, 1e-15);
}

TEST(BuildDual, DirichletSixtyTwo) {
    std::vector<double> f;
    for (int k = 0; k < 63; ++k) f.push_back(k);
    auto P = make(f, std::vector<cplx>(63, 1.0));
    auto c = build_dual(P);
    EXPECT_EQ(c.m, 5);
    EXPECT_TRUE(c.pass);
    EXPECT_LE(c.sup_T1, 48.0);
    EXPECT_GE(c.certified_bound, c.S / 96.0);
    auto v = verify_certificate(c, P);
    EXPECT_GE(v.l1_value, c.S / 96.0);
    EXPECT_LE(c.certified_bound, v.l1_value + v.l1_error);
    EXPECT_NEAR(v.l1_value, 4.0 / (pi * pi) * std::log(63.0), 1.5);
}

TEST(BuildDual, RandomInvariants) {
    gen::Rng rng(62);
    for (int it = 0; it < 25; ++it) {
        const std::size_t n = 1 + gen::integer(rng, 0, 126);
        auto P = random_instance(rng, n, std::min<std::int64_t>(2000, 4 * static_cast<std::int64_t>(n) + 50));
        auto c = build_dual(P);
        EXPECT_LE(c.closed_form_gap, 1e-8);
        EXPECT_LE(c.max_partial_sup, 2.0 / c.eta + 1e-6);
        EXPECT_LE(c.completion_gap, 1e-10);
        EXPECT_GT(c.sup_T1, 0.0);
        EXPECT_LE(c.sup_T1, 48.0 + c.pad);
        EXPECT_LE(c.certified_bound, c.S / c.sup_T1 + 1e-15);
        for (std::size_t k = 0; k < c.deviations.size(); ++k) {
            EXPECT_GE(c.deviations[k], 0.0);
            EXPECT_LE(c.deviations[k], 1.0 / (2.0 * double(k + 1)) + 1e-6);
        }
        auto l1 = l1_certified(P, {0.0, 1.0, true}, 1e-3);
        EXPECT_LE(c.certified_bound, l1.value + l1.error_bound);
    }
}

TEST(VerifyCertificate, TamperIsCaught) {
    gen::Rng rng(63);
    auto P = random_instance(rng, 20, 100);
    auto c = build_dual(P);
    EXPECT_NO_THROW(verify_certificate(c, P));
    auto bad = c;
    bad.sup_T1 *= 0.5;
    EXPECT_EQ(kind_of([&] { verify_certificate(bad, P); }), ErrorKind::CertificateMismatch);
    bad = c;
    bad.deviations[3] += 1e-3;
    EXPECT_EQ(kind_of([&] { verify_certificate(bad, P); }), ErrorKind::CertificateMismatch);
    auto Q = random_instance(rng, 21, 100);
    EXPECT_EQ(kind_of([&] { verify_certificate(c, Q); }), ErrorKind::CertificateMismatch);
}

TEST(BuildDual, Errors) {
    EXPECT_EQ(kind_of([] { build_dual(make({0.5, 2}, {1.0, 1.0})); }), ErrorKind::NonIntegerFrequencies);
    EXPECT_EQ(kind_of([] { build_dual(make({-1, 2}, {1.0, 1.0})); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { build_dual(make({0, 1e7}, {1.0, 1.0})); }), ErrorKind::GridOverflow);
    EXPECT_EQ(kind_of([] { build_dual(make({0, 1}, {1.0, 1.0}), 0.0); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { build_dual(make({0, 1}, {1.0, 1.0}), 1.0 / 24, 2); }), ErrorKind::InvalidArgument);
}

TEST(BuildDual, GridT1HasCertifiedSup) {
    gen::Rng rng(64);
    auto P = random_instance(rng, 30, 200);
    auto c = build_dual(P);
    auto T1 = mps_t1_grid(P, c.eta, c.oversample);
    ASSERT_EQ(T1.size(), c.grid_size);
    double s = 0.0;
    for (auto z : T1) s = std::max(s, std::abs(z));
    EXPECT_NEAR(s, c.grid_sup, 1e-12);
}
