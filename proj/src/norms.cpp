#include "triglab/norms.hpp"
#include "triglab/error.hpp"
#include "triglab/numeric.hpp"
#include "triglab/parallel.hpp"
#include "triglab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace triglab {

const char* method_name(NormMethod m) {
    switch (m) {
        case NormMethod::RiemannCertified: return "RiemannCertified";
        case NormMethod::Quadrature: return "Quadrature";
        case NormMethod::ExactGram: return "ExactGram";
        case NormMethod::ExactAutocorrelation: return "ExactAutocorrelation";
    }
    return "Unknown";
}

namespace {

// (1/T) int_I |P|^2 with phases for an off-center interval
double mean_square(const TrigPoly& P, double center, double T) {
    const auto& f = P.freqs();
    const auto& a = P.coeffs();
    const std::size_t n = f.size();
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        s += std::norm(a[j]);
        for (std::size_t k = j + 1; k < n; ++k) {
            const double d = f[j] - f[k];
            const cplx ph = center == 0.0 ? cplx(1.0, 0.0) : cplx(cos_pi(2.0 * d * center), sin_pi(2.0 * d * center));
            s += 2.0 * (a[j] * std::conj(a[k]) * ph).real() * sinc_pi(T * d);
        }
    }
    return std::max(s, 0.0);
}

void check_interval(const IntervalSpec& I) {
    if (!(I.T > 0.0) || !std::isfinite(I.T)) throw Error(ErrorKind::InvalidArgument, "interval length must be > 0");
}

}  // namespace

double l2_normalized(const TrigPoly& P, double T) {
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidArgument, "T must be > 0");
    return std::sqrt(mean_square(P, 0.0, T));
}

CertifiedValue l2_exact(const TrigPoly& P, const IntervalSpec& I) {
    check_interval(I);
    double v = std::sqrt(mean_square(P, I.center, I.T));
    if (!I.normalized) v *= std::sqrt(I.T);
    return {v, 0.0, NormMethod::ExactGram, 0};
}

CertifiedValue l1_certified(const TrigPoly& P, const IntervalSpec& I, double rel_tol, std::size_t cap) {
    check_interval(I);
    if (!(rel_tol > 0.0 && rel_tol < 0.5)) throw Error(ErrorKind::InvalidArgument, "rel_tol must lie in (0, 1/2)");
    const double scale = I.normalized ? 1.0 : I.T;
    const auto& f = P.freqs();
    const auto& a = P.coeffs();

    if (P.l1_coeffs() == 0.0) return {0.0, 0.0, NormMethod::RiemannCertified, 0};
    if (f.size() == 1) return {std::abs(a[0]) * scale, 0.0, NormMethod::RiemannCertified, 1};

    if (P.is_harmonic() && near_integer(I.T) && I.T >= 1.0) {
        // |P| is 1-periodic, one period suffices. After centering the degree is span/2.
        auto nf = P.int_freqs();
        const double d = 0.5 * static_cast<double>(nf.back() - nf.front());
        const double need = std::ceil(2.0 * pi * d * (1.0 + rel_tol) / rel_tol);
        const std::size_t M = sampling::harmonic_block(P);
        const std::size_t N = M * static_cast<std::size_t>(std::ceil(need / static_cast<double>(M)));
        if (N > cap) throw Error(ErrorKind::ResourceLimit, "needs " + std::to_string(N) + " samples");
        const double mean = sampling::harmonic_abs_pow_mean(P, N, 1.0);
        const double rho = 2.0 * pi * d / static_cast<double>(N);
        return {mean * scale, rho / (1.0 - rho) * mean * scale, NormMethod::RiemannCertified, N};
    }

    // general interval: midpoint rule, error <= (h/2) int |P'| <= (h/2) T sup|P'|
    const double mid = 0.5 * (f.front() + f.back());
    double dsup = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) dsup += std::abs(a[k]) * std::fabs(f[k] - mid);
    dsup *= 2.0 * pi;
    const double lo = I.center - 0.5 * I.T;
    auto run = [&](std::size_t n) { return sampling::abs_pow_mean(P, lo, I.T / static_cast<double>(n), n, 1.0); };
    // normalized error with n samples: T * dsup / (2n)
    std::size_t n = std::max<std::size_t>(1024, static_cast<std::size_t>(std::ceil(4.0 * I.T * (f.back() - mid))));
    n = std::min(n, cap);
    double est = run(n);
    for (int it = 0; it < 4; ++it) {
        const double err = I.T * dsup / (2.0 * static_cast<double>(n));
        if (est > 0.0 && err <= rel_tol * est) return {est * scale, err * scale, NormMethod::RiemannCertified, n};
        if (it == 3) break;
        const double target = est > 0.0 ? est : 1e-12;
        const double want = std::ceil(1.05 * I.T * dsup / (2.0 * rel_tol * target));
        if (want > static_cast<double>(cap))
            throw Error(ErrorKind::ResourceLimit, "needs " + std::to_string(want) + " samples");
        n = std::max(n + 1, static_cast<std::size_t>(want));
        est = run(n);
    }
    throw Error(ErrorKind::ResourceLimit, "tolerance not reached after refinement");
}

CertifiedValue lp_quadrature(const TrigPoly& P, const IntervalSpec& I, double p, std::size_t n) {
    check_interval(I);
    if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "p must be > 0");
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples");
    const double lo = I.center - 0.5 * I.T;
    const double full = sampling::abs_pow_mean(P, lo, I.T / static_cast<double>(n), n, p);
    const std::size_t h = n / 2;
    const double half = sampling::abs_pow_mean(P, lo, I.T / static_cast<double>(h), h, p);
    double v = std::pow(full, 1.0 / p);
    double vh = std::pow(half, 1.0 / p);
    double scale = I.normalized ? 1.0 : std::pow(I.T, 1.0 / p);
    return {v * scale, std::fabs(v - vh) * scale, NormMethod::Quadrature, n};
}

std::vector<std::pair<std::int64_t, cplx>> autocorrelation(const TrigPoly& P) {
    auto nf = P.int_freqs();
    const auto& a = P.coeffs();
    const std::int64_t span = nf.back() - nf.front();
    std::vector<std::pair<std::int64_t, cplx>> out;
    if (span <= (std::int64_t(1) << 22)) {
        std::vector<cplx> c(static_cast<std::size_t>(2 * span + 1), cplx(0.0, 0.0));
        for (std::size_t j = 0; j < nf.size(); ++j)
            for (std::size_t k = 0; k < nf.size(); ++k)
                c[static_cast<std::size_t>(nf[j] - nf[k] + span)] += a[j] * std::conj(a[k]);
        for (std::int64_t l = -span; l <= span; ++l) {
            const cplx v = c[static_cast<std::size_t>(l + span)];
            if (v != cplx(0.0, 0.0)) out.emplace_back(l, v);
        }
        return out;
    }
    std::map<std::int64_t, cplx> m;
    for (std::size_t j = 0; j < nf.size(); ++j)
        for (std::size_t k = 0; k < nf.size(); ++k) m[nf[j] - nf[k]] += a[j] * std::conj(a[k]);
    for (auto& [l, v] : m) out.emplace_back(l, v);
    return out;
}

double l4_via_autocorrelation(const TrigPoly& P) {
    double s = 0.0;
    for (auto& [l, v] : autocorrelation(P)) s += std::norm(v);
    return std::pow(s, 0.25);
}

std::optional<CommonDenominator> common_denominator(const std::vector<double>& freqs, double eps,
                                                    std::int64_t M_max) {
    if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be > 0");
    for (std::int64_t M = 1; M <= M_max; ++M) {
        double worst = 0.0;
        for (double l : freqs) {
            const double x = l * static_cast<double>(M);
            worst = std::max(worst, std::fabs(x - std::nearbyint(x)));
            if (worst >= eps) break;
        }
        if (worst < eps) {
            CommonDenominator cd;
            cd.M = M;
            cd.max_err = worst;
            for (double l : freqs) cd.numerators.push_back(static_cast<std::int64_t>(std::llround(l * static_cast<double>(M))));
            return cd;
        }
    }
    return std::nullopt;
}

BesicovitchReport besicovitch_estimate(const TrigPoly& P, BesicovitchStrategy strategy, const BesicovitchParams& prm) {
    BesicovitchReport rep;
    rep.strategy = strategy;
    if (strategy == BesicovitchStrategy::TSweep) {
        if (!(prm.T0 > 0.0) || prm.K < 0) throw Error(ErrorKind::InvalidArgument, "T0 > 0 and K >= 0 required");
        const auto& f = P.freqs();
        const double half_band = 0.5 * (f.back() - f.front());
        for (int k = 0; k <= prm.K; ++k) {
            const double T = prm.T0 * std::ldexp(1.0, k);
            IntervalSpec I{0.0, T, true};
            BesicovitchSample s;
            s.T = T;
            if (prm.certified) {
                auto v = l1_certified(P, I, prm.rel_tol);
                s.norm = v.value;
                s.error_bound = v.error_bound;
            } else {
                const double want = std::max(64.0 * T, prm.density * half_band * T * 2.0);
                const auto n = static_cast<std::size_t>(std::min(want, static_cast<double>(prm.quad_cap)));
                auto v = lp_quadrature(P, I, prm.p, std::max<std::size_t>(n, 2));
                s.norm = v.value;
                s.error_bound = v.error_bound;
            }
            rep.samples.push_back(s);
        }
        rep.trend_estimate = rep.samples.back().norm;
        return rep;
    }
    if (!(prm.eps > 0.0 && prm.eps < 0.1)) throw Error(ErrorKind::InvalidArgument, "eps must lie in (0, 0.1)");
    if (prm.M_max < 1) throw Error(ErrorKind::InvalidArgument, "M_max must be >= 1");
    auto cd = common_denominator(P.freqs(), prm.eps, prm.M_max);
    if (!cd) throw Error(ErrorKind::NoDenominatorFound, "no M <= " + std::to_string(prm.M_max));
    std::vector<std::pair<std::int64_t, cplx>> terms;
    for (std::size_t j = 0; j < P.size(); ++j) terms.emplace_back(cd->numerators[j], P.coeffs()[j]);
    // one period of Psi(t) = sum a_j exp(2 pi i N_j t / M), rescaled to [0, 1)
    TrigPoly psi = from_int_terms(terms);
    auto v = l1_certified(psi, IntervalSpec{0.0, 1.0, true}, prm.rel_tol);
    BesicovitchSample s;
    s.T = static_cast<double>(cd->M);
    s.M = cd->M;
    s.norm = v.value;
    s.error_bound = v.error_bound;
    s.eps = cd->max_err;
    s.slack = 2.0 * pi * cd->max_err * P.l1_coeffs();
    rep.samples.push_back(s);
    rep.trend_estimate = v.value;
    return rep;
}

}  // namespace triglab
