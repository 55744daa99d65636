#include "triglab/ingham.hpp"
#include "triglab/error.hpp"
#include "triglab/numeric.hpp"
#include "triglab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace triglab {

GramMatrix gram(const std::vector<double>& freqs, double T) {
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidArgument, "T must be > 0");
    for (std::size_t k = 1; k < freqs.size(); ++k)
        if (!(freqs[k] > freqs[k - 1])) throw Error(ErrorKind::NonIncreasingFrequencies, "gram needs increasing freqs");
    GramMatrix G;
    G.n = freqs.size();
    G.T = T;
    G.freqs = freqs;
    G.a.assign(G.n * G.n, 0.0);
    for (std::size_t i = 0; i < G.n; ++i) {
        G.a[i * G.n + i] = 1.0;
        for (std::size_t j = i + 1; j < G.n; ++j) {
            const double v = sinc_pi(T * (freqs[i] - freqs[j]));
            G.a[i * G.n + j] = v;
            G.a[j * G.n + i] = v;
        }
    }
    return G;
}

double quadratic_form(const GramMatrix& G, const std::vector<cplx>& a) {
    if (a.size() != G.n) throw Error(ErrorKind::LengthMismatch, "coefficient count != gram size");
    double s = 0.0;
    for (std::size_t i = 0; i < G.n; ++i) {
        s += std::norm(a[i]);
        for (std::size_t j = i + 1; j < G.n; ++j) s += 2.0 * (std::conj(a[i]) * a[j]).real() * G(i, j);
    }
    return s;
}

std::vector<double> jacobi_eigenvalues(const GramMatrix& G, int* sweeps) {
    const std::size_t n = G.n;
    std::vector<double> a = G.a;
    auto off = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a[i * n + j] * a[i * n + j];
        return std::sqrt(s);
    };
    int sw = 0;
    while (off() > 1e-12) {
        if (sw == 100) throw Error(ErrorKind::NoConvergence, "Jacobi did not converge in 100 sweeps");
        ++sw;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p], aqq = a[q * n + q];
                // classic stable rotation: t = sgn(th)/(|th| + sqrt(th^2+1))
                const double th = (aqq - app) / (2.0 * apq);
                const double t = (th >= 0.0 ? 1.0 : -1.0) / (std::fabs(th) + std::sqrt(th * th + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    if (sweeps) *sweeps = sw;
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::pair<double, double> eigen_range(const GramMatrix& G) {
    auto ev = jacobi_eigenvalues(G);
    return {ev.front(), ev.back()};
}

double converse_constant(double x, ConverseVariant v) {
    if (!(x > 1.0)) return 0.0;
    const double p2 = pi * pi;
    if (x <= 2.0) return p2 / 8.0 * (x * x - 1.0) / (x * x * x);
    if (v == ConverseVariant::Statement) return 3.0 * p2 / 64.0;
    if (x <= 6.0) return 3.0 * p2 / (32.0 * x);
    return p2 / 32.0;
}

std::pair<double, double> ingham_constants(double T, double gamma, ConverseVariant v) {
    if (!(gamma > 0.0) || !(T > 0.0)) throw Error(ErrorKind::InvalidArgument, "T and gamma must be > 0");
    const double x = gamma * T;
    return {converse_constant(x, v), 2.0 * (x + 1.0) / x};
}

FrameReport frame_report(const std::vector<double>& freqs, double T, std::optional<double> gamma, ConverseVariant v) {
    FrameReport r;
    r.T = T;
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < freqs.size(); ++k) g = std::min(g, freqs[k] - freqs[k - 1]);
    if (!std::isfinite(g)) g = 1.0;
    r.gamma = gamma ? *gamma : g;
    auto [lo, hi] = eigen_range(gram(freqs, T));
    r.lambda_min = lo;
    r.lambda_max = hi;
    auto [cl, cu] = ingham_constants(T, r.gamma, v);
    r.theory_lower = cl;
    r.theory_upper = cu;
    // Jacobi stops at off-diagonal norm 1e-12, so eigenvalues carry about that much error
    const double slack = 1e-12 * static_cast<double>(freqs.size()) * std::max(1.0, hi);
    r.lower_ok = lo >= cl - slack;
    r.upper_ok = hi <= cu + slack;
    return r;
}

namespace {

void check_haraux(double delta, const std::vector<double>& gammas, double T) {
    if (gammas.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one gap");
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidArgument, "T must be > 0");
    if (!(delta > 0.0 && delta <= std::min(T, 0.25))) throw Error(ErrorKind::InvalidDelta, "need 0 < delta <= min(T, 1/4)");
    for (double g : gammas)
        if (!(g > 0.0)) throw Error(ErrorKind::InvalidArgument, "gaps must be > 0");
}

}  // namespace

double haraux_bound(double C, double B, double delta, const std::vector<double>& gammas, double T,
                    std::optional<double> gamma0) {
    if (!(C > 0.0 && C <= 1.0 && B >= 1.0)) throw Error(ErrorKind::InvalidArgument, "need 0 < C <= 1 <= B");
    check_haraux(delta, gammas, T);
    const double n = static_cast<double>(gammas.size());
    double prod = 1.0 + 1.0 / ((gamma0 ? *gamma0 : gammas.front()) * T);
    for (double g : gammas) prod *= 1.0 + 1.0 / (g * T);
    const double d4 = std::pow(delta, 4);
    return pi * pi / 64.0 * std::pow(3.0 * d4 / 8192.0, n) * (gammas.back() * T - 1.0) / prod;
}

double haraux_bound_iterated(double delta, const std::vector<double>& gammas, double T) {
    check_haraux(delta, gammas, T);
    double c = pi * pi / 64.0 * (T * gammas.back() - 1.0);
    for (double g : gammas) c = haraux_step(c, 6.0 * (1.0 + 1.0 / (g * T)), delta);
    return c;
}

double haraux_step(double C, double B, double delta) {
    if (!(B > 0.0)) throw Error(ErrorKind::InvalidArgument, "B must be > 0");
    return haraux_kappa * (C / B) * std::pow(delta, 4);
}

double counterexample_ratio(double alpha, double r, int m) {
    if (!(alpha > 0.0 && alpha < 0.5)) throw Error(ErrorKind::InvalidArgument, "alpha outside (0, 1/2)");
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "r outside [0, 1)");
    if (m < 0) throw Error(ErrorKind::InvalidArgument, "m < 0");
    if (m > 4096) throw Error(ErrorKind::ResourceLimit, "m above 4096");
    auto c = counterexample_coeffs(alpha, r, m);
    const double h = 0.5 * (alpha + 1.0);
    const std::size_t n = c.size();
    // frequencies -(i + h) and +(j + h); same-side differences are integers and sinc vanishes,
    // so only the diagonal and the cross terms (i + j + 2h) survive
    double denom = 0.0;
    for (double v : c) denom += v * v;
    denom *= 2.0;
    double cross = par::chunked_sum(n, 64, [&](std::size_t b, std::size_t e) {
        double s = 0.0;
        for (std::size_t i = b; i < e; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s += c[i] * c[j] * sinc_pi(static_cast<double>(i + j) + 2.0 * h);
        return s;
    });
    return (denom + 2.0 * cross) / denom;
}

}  // namespace triglab
