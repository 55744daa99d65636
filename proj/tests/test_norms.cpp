#include "gen.hpp"
#include "oracle.hpp"
#include "triglab/error.hpp"
#include "triglab/norms.hpp"
#include "triglab/numeric.hpp"
#include "triglab/sampling.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <map>

using namespace triglab;

namespace {

using oracle::eigen_mean;

// direct O(n^2) autocorrelation
std::map<std::int64_t, cplx> autocorr_oracle(const TrigPoly& P) {
    auto nf = P.int_freqs();
    std::map<std::int64_t, cplx> m;
    for (std::size_t j = 0; j < nf.size(); ++j)
        for (std::size_t k = 0; k < nf.size(); ++k) m[nf[j] - nf[k]] += P.coeffs()[j] * std::conj(P.coeffs()[k]);
    return m;
}

}  // namespace

TEST(L2, Examples) {
    EXPECT_NEAR(l2_normalized(make({0, 1}, {1.0, 1.0}), 1.0), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(l2_normalized(family(Dirichlet{5}), 1.0), std::sqrt(11.0), 1e-13);
    // |1 + e(t/2)|^2 = 2 + 2 cos(pi t); mean over [-1/2,1/2] = 2 + 4/pi
    EXPECT_NEAR(l2_normalized(make({0, 0.5}, {1.0, 1.0}), 1.0), std::sqrt(2.0 + 4.0 / pi), 1e-14);
    auto v = l2_exact(make({0, 0.5}, {1.0, 1.0}), {0.0, 1.0, false});
    EXPECT_EQ(v.method, NormMethod::ExactGram);
    EXPECT_EQ(v.error_bound, 0.0);
    EXPECT_THROW(l2_normalized(make({0}, {1.0}), 0.0), Error);
}

TEST(L2, MatchesQuadratureAndTendsToCoefficientNorm) {
    gen::Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 1 + gen::integer(rng, 0, 15);
        TrigPoly P(gen::separated(rng, n, 0.3, 1.0), gen::coeffs(rng, n));
        const double c = gen::uniform(rng, -2, 2), T = gen::uniform(rng, 0.5, 3);
        const double exact = l2_exact(P, {c, T, true}).value;
        const double quad = std::sqrt(sampling::abs_pow_mean_serial(P, c - T / 2, T / 20000, 20000, 2.0));
        EXPECT_NEAR(exact, quad, 1e-6 * std::max(1.0, exact));
        EXPECT_NEAR(l2_normalized(P, 1e6), P.l2_coeffs(), 1e-3 * P.l2_coeffs());
    }
}

TEST(L1, DirichletExamples) {
    // D_1 = 1 + 2 cos(2 pi t): |D_1|_1 = 1/3 + 2 sqrt(3)/pi
    auto v = l1_certified(family(Dirichlet{1}), {0.0, 1.0, true}, 1e-6);
    const double ref = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / pi;
    EXPECT_LE(std::fabs(v.value - ref), v.error_bound + 1e-12);
    EXPECT_LE(v.error_bound, 1e-6 * v.value * 1.001);
    auto w = l1_certified(family(Dirichlet{1000}), {0.0, 1.0, true}, 1e-3);
    EXPECT_GT(w.value - 4.0 / (pi * pi) * std::log(1000.0), 0.0);
    EXPECT_LT(w.value - 4.0 / (pi * pi) * std::log(1000.0), 1.5);
    EXPECT_EQ(w.method, NormMethod::RiemannCertified);
}

TEST(L1, SingleTermAndZero) {
    auto v = l1_certified(make({2.5}, {cplx(3, 4)}), {1.0, 2.0, false}, 1e-3);
    EXPECT_DOUBLE_EQ(v.value, 10.0);
    EXPECT_EQ(v.error_bound, 0.0);
    auto z = l1_certified(make({0, 1}, {0.0, 0.0}), {0.0, 1.0, true}, 1e-3);
    EXPECT_EQ(z.value, 0.0);
}

TEST(L1, CertifiedAgainstIndependentReference) {
    gen::Rng rng(32);
    for (int it = 0; it < 40; ++it) {
        auto P = gen::harmonic(rng, 1 + gen::integer(rng, 1, 30), -40, 40);
        auto v = l1_certified(P, {0.0, 1.0, true}, 1e-3);
        const double ref = eigen_mean(P, 4 * v.samples, 1.0);
        EXPECT_LE(std::fabs(v.value - ref), v.error_bound);
        EXPECT_LE(v.value, P.l2_coeffs() + v.error_bound);  // L1 <= L2
    }
}

TEST(L1, NonHarmonicCertified) {
    gen::Rng rng(33);
    for (int it = 0; it < 10; ++it) {
        const std::size_t n = 2 + gen::integer(rng, 0, 8);
        TrigPoly P(gen::separated(rng, n, 1.0, 0.7), gen::coeffs(rng, n));
        const double T = gen::uniform(rng, 0.8, 3.0);
        auto v = l1_certified(P, {0.3, T, true}, 1e-3);
        const double ref = sampling::abs_pow_mean_serial(P, 0.3 - T / 2, T / 400000, 400000, 1.0);
        EXPECT_LE(std::fabs(v.value - ref), v.error_bound + 1e-9);
        // Cauchy-Schwarz against the exact L2
        EXPECT_LE(v.value - v.error_bound, l2_exact(P, {0.3, T, true}).value + 1e-12);
    }
}

TEST(L1, ResourceLimitAndBadArgs) {
    auto P = family(Dirichlet{5000});
    EXPECT_THROW(
        {
            try {
                l1_certified(P, {0.0, 1.0, true}, 1e-3, 1 << 16);
            } catch (const Error& e) {
                EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
                throw;
            }
        },
        Error);
    EXPECT_THROW(l1_certified(P, {0.0, 1.0, true}, 0.0), Error);
    EXPECT_THROW(l1_certified(P, {0.0, -1.0, true}, 1e-3), Error);
}

TEST(Quadrature, ConvergesOnSmoothIntegrand) {
    auto P = make({0, 1}, {1.0, 1.0});
    // |1+e(t)|^2 = 2 + 2cos(2 pi t); mean over a period is 2
    auto v = lp_quadrature(P, {0.0, 1.0, true}, 2.0, 64);
    EXPECT_NEAR(v.value, std::sqrt(2.0), 1e-13);
    EXPECT_EQ(v.method, NormMethod::Quadrature);
    EXPECT_THROW(lp_quadrature(P, {0.0, 1.0, true}, 0.0, 64), Error);
    EXPECT_THROW(lp_quadrature(P, {0.0, 1.0, true}, 1.0, 1), Error);
}

TEST(L4, MatchesExactSampleMean) {
    gen::Rng rng(34);
    for (int it = 0; it < 40; ++it) {
        auto P = gen::harmonic(rng, 1 + gen::integer(rng, 0, 25), -30, 30);
        auto nf = P.int_freqs();
        const auto span = static_cast<std::size_t>(nf.back() - nf.front());
        // |P|^4 has spectrum in [-2 span, 2 span], so n > 4 span samples is exact
        const double ref = std::pow(eigen_mean(P, 4 * span + 8, 4.0), 0.25);
        EXPECT_NEAR(l4_via_autocorrelation(P), ref, 1e-11 * ref);
        auto ac = autocorrelation(P);
        auto oracle = autocorr_oracle(P);
        for (auto& [l, v] : ac) EXPECT_LE(std::abs(v - oracle[l]), 1e-12);
        EXPECT_NEAR(ac[ac.size() / 2].second.real(), P.l2_coeffs() * P.l2_coeffs(), 1e-12);
    }
}

TEST(L4, NewmanAutocorrelationClosedForm) {
    auto P = family(Newman{16});
    for (auto& [l, v] : autocorrelation(P)) {
        const double s = std::sin(pi * l / 17.0);
        const double ref = l == 0 ? 289.0 : std::pow(std::sin(pi * l * l / 17.0) / s, 2);
        EXPECT_NEAR(std::norm(v), ref, 1e-10) << l;
    }
    EXPECT_THROW(autocorrelation(make({0.5}, {1.0})), Error);
}

TEST(CommonDenominator, Examples) {
    auto a = common_denominator({0.0, 0.5, 1.0}, 1e-9, 100);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->M, 2);
    EXPECT_EQ(a->numerators, (std::vector<std::int64_t>{0, 1, 2}));
    // 70 sqrt 2 = 98.9949..., the first M with distance < 0.01
    auto b = common_denominator({std::sqrt(2.0)}, 0.01, 1000);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->M, 70);
    EXPECT_EQ(b->numerators[0], 99);
    EXPECT_LT(b->max_err, 0.01);
    EXPECT_FALSE(common_denominator({std::sqrt(2.0)}, 1e-9, 50));
    EXPECT_THROW(common_denominator({1.0}, 0.0, 5), Error);
}

TEST(Besicovitch, HarmonicAndNonHarmonic) {
    // harmonic: every window of integer length gives the same mean
    BesicovitchParams bp;
    bp.T0 = 1.0;
    bp.K = 3;
    auto r = besicovitch_estimate(family(Dirichlet{1}), BesicovitchStrategy::TSweep, bp);
    ASSERT_EQ(r.samples.size(), 4u);
    const double ref = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / pi;
    for (auto& s : r.samples) EXPECT_LE(std::fabs(s.norm - ref), s.error_bound + 1e-12);
    // 1 + e(sqrt2 t): Besicovitch L1 is the mean of |1 + e(x)|, i.e. 4/pi
    auto P = make({0, std::sqrt(2.0)}, {1.0, 1.0});
    BesicovitchParams dp;
    dp.eps = 1e-4;
    dp.M_max = 1000000;
    auto d = besicovitch_estimate(P, BesicovitchStrategy::DirichletApprox, dp);
    ASSERT_EQ(d.samples.size(), 1u);
    EXPECT_NEAR(d.trend_estimate, 4.0 / pi, d.samples[0].error_bound + d.samples[0].slack);
    bp.T0 = 8.0;
    bp.K = 4;
    auto t = besicovitch_estimate(P, BesicovitchStrategy::TSweep, bp);
    EXPECT_NEAR(t.trend_estimate, 4.0 / pi, 0.02);
    dp.M_max = 3;
    EXPECT_THROW(besicovitch_estimate(P, BesicovitchStrategy::DirichletApprox, dp), Error);
}
