#include "triglab/kernels.hpp"
#include "triglab/error.hpp"
#include "triglab/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace triglab {

namespace {

double h_hat(double lambda) {
    // (2/pi) cos(pi l)/(1-4l^2) rewritten around |l| = 1/2 as sinc over (|l|+1/2)
    const double a = std::fabs(lambda);
    return 0.5 * sinc_pi(a - 0.5) / (a + 0.5);
}

double g_time(double x) {
    const double a = std::fabs(x);
    if (a > 1.0) return 0.0;
    return (sin_pi(a) - pi * (a - 1.0) * cos_pi(x)) / (2.0 * pi);
}

// h' * h'
double hp_hp(double x) {
    const double a = std::fabs(x);
    if (a > 1.0) return 0.0;
    return 0.5 * pi * sin_pi(a) - 0.5 * pi * pi * (1.0 - a) * cos_pi(x);
}

double need_T(std::optional<double> T) {
    if (!T) throw Error(ErrorKind::MissingT, "G_T needs T");
    if (!(*T > 1.0)) throw Error(ErrorKind::InvalidArgument, "G_T needs T > 1");
    return *T;
}

// 16 point Gauss-Legendre on [-1, 1], nodes by Newton on P_16
struct GaussLegendre {
    static constexpr int n = 16;
    std::array<double, n> x{}, w{};
    GaussLegendre() {
        for (int i = 0; i < n; ++i) {
            double z = std::cos(pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::fabs(dz) < 1e-16) {
                    x[i] = z;
                    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
                    break;
                }
                x[i] = z;
                w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
            }
        }
    }
};

const GaussLegendre& gauss() {
    static const GaussLegendre g;
    return g;
}

}  // namespace

double ingham_eval(InghamFn which, std::optional<double> T, double x) {
    switch (which) {
        case InghamFn::h: return std::fabs(x) <= 0.5 ? cos_pi(x) : 0.0;
        case InghamFn::h_hat: return h_hat(x);
        case InghamFn::g: return g_time(x);
        case InghamFn::g_hat: {
            const double v = h_hat(x);
            return v * v;
        }
        case InghamFn::GT: {
            const double t = need_T(T);
            return pi * pi * t * t * g_time(x) + hp_hp(x);
        }
        case InghamFn::GT_hat: {
            const double t = need_T(T);
            const double v = h_hat(x);
            return pi * pi * (t * t - 4.0 * x * x) * v * v;
        }
    }
    return 0.0;
}

SmoothingKernelParams smoothing_params(double delta) {
    if (!(delta > 0.0 && delta < 7.0 / (3.0 * pi)))
        throw Error(ErrorKind::InvalidDelta, "delta must lie in (0, 7/(3 pi))");
    SmoothingKernelParams k;
    k.delta = delta;
    const int pq = k.p + k.q;
    k.gamma_delta = std::pow(sinc(pi * delta / pq), pq);
    const double ex = static_cast<double>(pq) / (k.p + 2);
    const double c0 = std::pow(3.0, -1.0 / (k.p + 2)) * std::pow(pq / pi, ex);
    k.D_delta = c0 * std::pow(delta, -ex);
    k.sup_bound = pi / 2.0;
    return k;
}

double phi_delta_hat(const SmoothingKernelParams& k, double lambda) {
    const int pq = k.p + k.q;
    const double s = sinc(pi * k.delta * lambda / pq);
    return 0.5 * pi * h_hat(lambda) * std::pow(s, pq);
}

double box_spline(const SmoothingKernelParams& k, double s) {
    const int n = k.p + k.q;
    const double w = k.delta / n;
    const double x = s / w + 0.5 * n;  // cardinal B-spline M_n on [0, n]
    if (x <= 0.0 || x >= n) return 0.0;
    // M_1(x - i), then the two-term recursion up to order n
    std::array<double, 33> b{};
    if (n > 32) throw Error(ErrorKind::InvalidArgument, "spline order above 32");
    for (int i = 0; i < n; ++i) {
        const double y = x - i;
        b[static_cast<std::size_t>(i)] = (y >= 0.0 && y < 1.0) ? 1.0 : 0.0;
    }
    for (int ord = 2; ord <= n; ++ord) {
        for (int i = 0; i + ord <= n; ++i) {
            const double y = x - i;
            b[static_cast<std::size_t>(i)] =
                (y * b[static_cast<std::size_t>(i)] + (ord - y) * b[static_cast<std::size_t>(i) + 1]) / (ord - 1);
        }
    }
    return b[0] / w;
}

double phi_delta(const SmoothingKernelParams& k, double t) {
    const int n = k.p + k.q;
    const double w = k.delta / n;
    const double lo = -0.5 * k.delta;
    const auto& gl = gauss();
    // breakpoints: spline knots plus the kinks of h(t - s) at s = t -+ 1/2
    std::vector<double> br;
    for (int i = 0; i <= n; ++i) br.push_back(lo + i * w);
    for (double kink : {t - 0.5, t + 0.5})
        if (kink > lo && kink < -lo) br.push_back(kink);
    std::sort(br.begin(), br.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        const double a = br[i], b = br[i + 1];
        if (b - a <= 0.0) continue;
        const double m = 0.5 * (a + b), r = 0.5 * (b - a);
        double part = 0.0;
        for (int j = 0; j < gl.n; ++j) {
            const double s = m + r * gl.x[static_cast<std::size_t>(j)];
            const double u = t - s;
            if (std::fabs(u) > 0.5) continue;
            part += gl.w[static_cast<std::size_t>(j)] * cos_pi(u) * box_spline(k, s);
        }
        acc += r * part;
    }
    return 0.5 * pi * acc;
}

bool decay_bound_applicable(const SmoothingKernelParams& k) {
    // max of |sin x / x| over |x| >= pi, attained near x = 4.4934
    constexpr double sinc_tail_max = 0.21723362821122166;
    const double x = pi * k.delta / (k.p + k.q);
    return x <= pi && sinc(x) >= sinc_tail_max;
}

double DiscreteKernel::at(std::int64_t k) const {
    if (k < lo || k > hi()) return 0.0;
    return values[static_cast<std::size_t>(k - lo)];
}

cplx DiscreteKernel::transform(double t) const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double k = static_cast<double>(lo + static_cast<std::int64_t>(i));
        const double x = -2.0 * k * t;
        s += values[i] * cplx(cos_pi(x), sin_pi(x));
    }
    return s;
}

DiscreteKernel dirichlet_kernel(int L) {
    if (L < 0) throw Error(ErrorKind::InvalidArgument, "L < 0");
    return {-L, std::vector<double>(static_cast<std::size_t>(2 * L + 1), 1.0), false};
}

DiscreteKernel fejer_kernel(int L) {
    if (L < 0) throw Error(ErrorKind::InvalidArgument, "L < 0");
    DiscreteKernel K{-L, {}, false};
    for (int k = -L; k <= L; ++k) K.values.push_back(1.0 - std::abs(k) / (L + 1.0));
    return K;
}

DiscreteKernel hanson_kernel(int M, int N) {
    if (M < 1 || N < 0) throw Error(ErrorKind::InvalidMN, "need M >= 1 and N >= 0");
    const std::int64_t R = static_cast<std::int64_t>(N) + 2 * M - 1;
    DiscreteKernel K{-R, {}, !(M >= 2 && M < N)};
    for (std::int64_t k = -R; k <= R; ++k) {
        double s = 0.0;
        for (std::int64_t n = -(M - 1); n <= M - 1; ++n)
            if (std::llabs(k - n) <= N + M) s += 1.0 - static_cast<double>(std::llabs(n)) / M;
        K.values.push_back(s / M);
    }
    return K;
}

double dirichlet_closed(int L, double t) {
    const double d = sin_pi(t);
    if (std::fabs(d) < 1e-7) {
        // cancellation near integers, sum directly
        double s = 1.0;
        for (int k = 1; k <= L; ++k) s += 2.0 * cos_pi(2.0 * k * t);
        return s;
    }
    return sin_pi((2.0 * L + 1.0) * t) / d;
}

double fejer_closed(int L, double t) {
    const double d = sin_pi(t);
    if (std::fabs(d) < 1e-7) {
        double s = 1.0;
        for (int k = 1; k <= L; ++k) s += 2.0 * (1.0 - k / (L + 1.0)) * cos_pi(2.0 * k * t);
        return s;
    }
    const double n = sin_pi((L + 1.0) * t);
    return n * n / (d * d) / (L + 1.0);
}

double hanson_transform_closed(int M, int N, double t) {
    return dirichlet_closed(N + M, t) * fejer_closed(M - 1, t) / M;
}

TrigPoly kernel_poly(const DiscreteKernel& K) {
    std::vector<double> f;
    std::vector<cplx> c;
    for (std::int64_t k = K.hi(); k >= K.lo; --k) {
        f.push_back(static_cast<double>(-k));
        c.push_back(K.at(k));
    }
    return TrigPoly(f, c);
}

}  // namespace triglab
