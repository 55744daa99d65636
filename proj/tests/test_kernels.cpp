#include "gen.hpp"
#include "triglab/error.hpp"
#include "triglab/kernels.hpp"
#include "triglab/norms.hpp"
#include "triglab/numeric.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace triglab;

TEST(Ingham, Examples) {
    EXPECT_NEAR(ingham_eval(InghamFn::h_hat, {}, 0.5), 0.5, 1e-15);
    EXPECT_NEAR(ingham_eval(InghamFn::h_hat, {}, -0.5), 0.5, 1e-15);
    EXPECT_NEAR(ingham_eval(InghamFn::h_hat, {}, 0.0), 2.0 / pi, 1e-15);
    EXPECT_NEAR(ingham_eval(InghamFn::g, {}, 0.0), 0.5, 1e-15);
    EXPECT_EQ(ingham_eval(InghamFn::g, {}, 1.2), 0.0);
    EXPECT_NEAR(ingham_eval(InghamFn::GT_hat, 2.0, 1.0), 0.0, 1e-15);
    EXPECT_NEAR(ingham_eval(InghamFn::GT, 2.0, 0.0), 1.5 * pi * pi, 1e-12);
    EXPECT_NEAR(ingham_eval(InghamFn::GT, 3.0, 0.0), pi * pi * 4.0, 1e-12);
    EXPECT_EQ(ingham_eval(InghamFn::h, {}, 0.7), 0.0);
    try {
        ingham_eval(InghamFn::GT, std::nullopt, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingT);
    }
    EXPECT_THROW(ingham_eval(InghamFn::GT_hat, std::nullopt, 0.1), Error);
}

TEST(Ingham, HHatClosedForm) {
    for (int i = 0; i <= 1000; ++i) {
        const double t = -3.0 + 6.0 * i / 1000.0;
        if (std::fabs(std::fabs(t) - 0.5) < 1e-6) continue;
        const double ref = 2.0 / pi * std::cos(pi * t) / (1.0 - 4.0 * t * t);
        EXPECT_NEAR(ingham_eval(InghamFn::h_hat, {}, t), ref, 1e-12);
    }
}

TEST(Ingham, GHatIsSquareAndBounded) {
    for (int i = 0; i < 1000; ++i) {
        const double t = -2.0 + 4.0 * i / 999.0;
        const double h = ingham_eval(InghamFn::h_hat, {}, t), g = ingham_eval(InghamFn::g_hat, {}, t);
        EXPECT_NEAR(g, h * h, 1e-12);
        EXPECT_GE(g, 0.0);
        // on |t| <= 1/2 h_hat >= 1/2, so g_hat sits between 1/4 and 4/pi^2
        if (std::fabs(t) <= 0.5) {
            EXPECT_GE(g, 0.25 - 1e-15);
            EXPECT_LE(g, 4.0 / (pi * pi) + 1e-15);
        }
    }
    EXPECT_NEAR(ingham_eval(InghamFn::g_hat, {}, 0.0), 4.0 / (pi * pi), 1e-15);
}

TEST(Ingham, GFromConvolution) {
    // g = h * h by a midpoint rule
    for (double x : {0.0, 0.2, 0.5, 0.9}) {
        const int n = 20000;
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            const double u = -0.5 + (j + 0.5) / n;
            s += ingham_eval(InghamFn::h, {}, u) * ingham_eval(InghamFn::h, {}, x - u);
        }
        EXPECT_NEAR(ingham_eval(InghamFn::g, {}, x), s / n, 1e-6);
    }
}

TEST(Ingham, GTHatSign) {
    for (double T : {1.25, 1.5, 2.0}) {
        for (int i = 0; i <= 400; ++i) {
            const double t = -2.0 * T + 4.0 * T * i / 400.0;
            const double v = ingham_eval(InghamFn::GT_hat, T, t);
            if (std::fabs(t) <= T / 2) EXPECT_GE(v, -1e-15) << T << " " << t;
            else EXPECT_LE(v, 1e-15) << T << " " << t;
        }
    }
}

TEST(Smoothing, ParamsAndTransformExamples) {
    auto k = smoothing_params(0.5);
    EXPECT_EQ(k.p, 10);
    EXPECT_EQ(k.q, 8);
    EXPECT_NEAR(k.gamma_delta, std::pow(std::sin(pi * 0.5 / 18) / (pi * 0.5 / 18), 18), 1e-15);
    EXPECT_GT(k.gamma_delta, 0.0);
    EXPECT_LT(k.gamma_delta, 1.0);
    EXPECT_GE(k.D_delta, 1.0);
    const double c0 = std::pow(3.0, -1.0 / 12) * std::pow(18.0 / pi, 1.5);
    EXPECT_NEAR(k.D_delta, c0 * std::pow(0.5, -1.5), 1e-12);
    EXPECT_DOUBLE_EQ(k.sup_bound, pi / 2);
    EXPECT_NEAR(phi_delta_hat(k, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(phi_delta_hat(k, 0.5), pi / 4 * std::pow(std::sin(pi * 0.5 / 36) / (pi * 0.5 / 36), 18), 1e-14);
    EXPECT_THROW(smoothing_params(0.0), Error);
    EXPECT_THROW(smoothing_params(1.0), Error);
}

TEST(Smoothing, DecayBounds) {
    for (double d : {0.3, 0.5}) {
        auto k = smoothing_params(d);
        ASSERT_TRUE(decay_bound_applicable(k));
        const double L = std::max(1.0, k.D_delta);
        EXPECT_LE(std::fabs(phi_delta_hat(k, L)), std::pow(L, -8.0));
        for (int i = 0; i <= 2000; ++i) {
            const double lam = 1.0 + 0.05 * i;
            EXPECT_LE(std::fabs(phi_delta_hat(k, lam)), k.gamma_delta / (4 * lam * lam - 1) + 1e-16);
            EXPECT_LE(std::fabs(phi_delta_hat(k, -lam)), k.gamma_delta / (4 * lam * lam - 1) + 1e-16);
        }
    }
}

TEST(Smoothing, BoxSplineIsADensity) {
    auto k = smoothing_params(0.5);
    const int n = 20000;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += box_spline(k, -0.25 + 0.5 * (j + 0.5) / n);
    EXPECT_NEAR(s * 0.5 / n, 1.0, 1e-9);
    EXPECT_EQ(box_spline(k, 0.26), 0.0);
    EXPECT_NEAR(box_spline(k, 0.1), box_spline(k, -0.1), 1e-12);
}

TEST(Smoothing, TimeDomainSupAndTransform) {
    auto k = smoothing_params(0.5);
    const double half = 0.5 + 0.5 * k.delta;  // support of h * g_delta
    double sup = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double t = -half + 2 * half * (i + 0.5) / 10000;
        sup = std::max(sup, std::fabs(phi_delta(k, t)));
    }
    EXPECT_LE(sup, pi / 2 + 1e-9);
    EXPECT_EQ(phi_delta(k, half + 0.01), 0.0);
    // discrete forward transform of the time samples against the closed form
    const int n = 2000;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = phi_delta(k, -half + 2 * half * i / n);
    double peak = 0.0;
    std::vector<std::pair<double, double>> got;
    for (double lam : {0.0, 0.25, 0.5, 1.0, 1.7, 3.0}) {
        double re = 0.0;
        for (int i = 0; i < n; ++i) re += v[static_cast<std::size_t>(i)] * std::cos(2 * pi * lam * (-half + 2 * half * i / n));
        re *= 2 * half / n;
        got.emplace_back(lam, re);
        peak = std::max(peak, std::fabs(phi_delta_hat(k, lam)));
    }
    for (auto& [lam, re] : got) EXPECT_NEAR(re, phi_delta_hat(k, lam), 1e-6 * peak) << lam;
}

TEST(DiscreteKernels, HansonExamples) {
    auto K = hanson_kernel(2, 2);
    for (int k = -2; k <= 2; ++k) EXPECT_DOUBLE_EQ(K.at(k), 1.0);
    for (int k = 6; k <= 10; ++k) {
        EXPECT_EQ(K.at(k), 0.0);
        EXPECT_EQ(K.at(-k), 0.0);
    }
    EXPECT_DOUBLE_EQ(K.at(5), 0.25);
    EXPECT_TRUE(K.outside_lemma_range);
    EXPECT_FALSE(hanson_kernel(2, 5).outside_lemma_range);
    EXPECT_THROW(hanson_kernel(0, 4), Error);
    try {
        hanson_kernel(3, -1);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidMN);
    }
}

TEST(DiscreteKernels, ProductFormulaProperties) {
    gen::Rng rng(51);
    for (int it = 0; it < 20; ++it) {
        const int M = static_cast<int>(gen::integer(rng, 2, 10)), N = M + static_cast<int>(gen::integer(rng, 1, 30));
        auto K = hanson_kernel(M, N);
        for (int k = -N; k <= N; ++k) EXPECT_NEAR(K.at(k), 1.0, 1e-14);
        for (int k = N + 2 * M; k < N + 2 * M + 5; ++k) EXPECT_EQ(K.at(k), 0.0);
        for (int i = 0; i < 50; ++i) {
            const double t = gen::uniform(rng, -1.0, 1.0);
            const cplx v = K.transform(t);
            const double ref = hanson_transform_closed(M, N, t);
            EXPECT_NEAR(v.real(), ref, 1e-10 * std::max(1.0, std::fabs(ref)));
            EXPECT_NEAR(v.imag(), 0.0, 1e-10 * (N + 2 * M));
        }
    }
}

TEST(DiscreteKernels, HansonTransformL1) {
    auto P = kernel_poly(hanson_kernel(4, 16));
    auto v = l1_certified(P, {0.0, 1.0, true}, 1e-3);
    EXPECT_LE(v.value, 8.0 * (2.0 + std::log(1.0 + 16.0 / 4.0)));
    EXPECT_GE(v.value, 1.0);  // >= |K(0)|
}

TEST(DiscreteKernels, DirichletFejerClosedForms) {
    gen::Rng rng(52);
    for (int L : {0, 1, 5, 40}) {
        auto D = dirichlet_kernel(L);
        auto F = fejer_kernel(L);
        for (int i = 0; i < 30; ++i) {
            const double t = gen::uniform(rng, -1, 1);
            EXPECT_NEAR(D.transform(t).real(), dirichlet_closed(L, t), 1e-10 * (2 * L + 1));
            EXPECT_NEAR(F.transform(t).real(), fejer_closed(L, t), 1e-10 * (L + 1));
            EXPECT_GE(fejer_closed(L, t), -1e-12);
        }
        EXPECT_NEAR(dirichlet_closed(L, 0.0), 2 * L + 1, 1e-12);
        EXPECT_NEAR(fejer_closed(L, 1.0), L + 1, 1e-12);
    }
    // kernel_poly(t) is the same function as transform(t)
    auto K = hanson_kernel(3, 7);
    auto P = kernel_poly(K);
    for (double t : {0.1, 0.33, -0.7}) EXPECT_LE(std::abs(P.eval(t) - K.transform(t)), 1e-12);
}
