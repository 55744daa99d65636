#include "triglab/mps.hpp"
#include "triglab/error.hpp"
#include "triglab/norms.hpp"
#include "triglab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace triglab {

namespace {

constexpr std::size_t max_grid = std::size_t(1) << 24;

struct Construction {
    MpsCertificate cert;
    fft::cvec t1;
};

std::size_t wrap(std::int64_t b, std::size_t G) {
    const auto g = static_cast<std::int64_t>(G);
    return static_cast<std::size_t>(((b % g) + g) % g);
}

Construction construct(const TrigPoly& P, double eta, int oversample) {
    if (!(eta > 0.0 && eta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eta must lie in (0, 1]");
    if (oversample < 4) throw Error(ErrorKind::InvalidArgument, "oversample must be >= 4");
    auto nf = P.int_freqs();
    if (nf.front() < 0) throw Error(ErrorKind::InvalidArgument, "frequencies must be nonnegative");
    const auto& a = P.coeffs();
    const std::size_t N = nf.size() - 1;

    Construction out;
    MpsCertificate& c = out.cert;
    c.eta = eta;
    c.oversample = oversample;
    while ((std::size_t(1) << (c.m + 1)) - 2 < N) ++c.m;
    const double want = static_cast<double>(oversample) * (static_cast<double>(nf.back()) + 1.0);
    if (want > static_cast<double>(max_grid)) throw Error(ErrorKind::GridOverflow, "grid would exceed 2^24");
    const std::size_t G = std::max<std::size_t>(8, next_pow2(static_cast<std::size_t>(want)));
    c.grid_size = G;

    std::vector<cplx> u(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        const double r = std::abs(a[k]);
        u[k] = r > 0.0 ? std::conj(a[k]) / r : cplx(1.0, 0.0);
        c.S += r / (k + 1.0);
    }

    // blocks f_j and their completions h_j; padded indices carry no terms
    std::vector<fft::cvec> f(static_cast<std::size_t>(c.m) + 1), h(static_cast<std::size_t>(c.m) + 1);
    for (int j = 0; j <= c.m; ++j) {
        MpsBlock blk;
        blk.j = j;
        fft::cvec grid(G, cplx(0.0, 0.0));
        for (std::size_t k = (std::size_t(1) << j) - 1; k < (std::size_t(1) << (j + 1)) - 1 && k <= N; ++k) {
            const cplx w = u[k] / (k + 1.0);
            blk.indices.push_back(k);
            blk.freqs.push_back(nf[k]);
            blk.coeffs.push_back(w);
            grid[wrap(-nf[k], G)] += w;
        }
        fft::inverse(grid);
        std::vector<double> mod(G);
        for (std::size_t p = 0; p < G; ++p) {
            mod[p] = std::abs(grid[p]);
            blk.grid_sup = std::max(blk.grid_sup, mod[p]);
        }
        auto hj = analytic_completion(mod);
        for (std::size_t p = 0; p < G; ++p) c.completion_gap = std::max(c.completion_gap, std::fabs(hj[p].real() - mod[p]));
        f[static_cast<std::size_t>(j)] = std::move(grid);
        h[static_cast<std::size_t>(j)] = std::move(hj);
        c.blocks.push_back(std::move(blk));
    }

    // F_0 = f_0, F_{j+1} = F_j exp(-eta h_{j+1}) + f_{j+1}
    fft::cvec F = f[0];
    for (auto& z : F) c.max_partial_sup = std::max(c.max_partial_sup, std::abs(z));
    for (int j = 1; j <= c.m; ++j) {
        const auto& hj = h[static_cast<std::size_t>(j)];
        const auto& fj = f[static_cast<std::size_t>(j)];
        for (std::size_t p = 0; p < G; ++p) {
            F[p] = F[p] * std::exp(-eta * hj[p]) + fj[p];
            c.max_partial_sup = std::max(c.max_partial_sup, std::abs(F[p]));
        }
    }

    // closed form sum_j f_j exp(-eta sum_{l>j} h_l)
    {
        fft::cvec acc(G, cplx(0.0, 0.0)), tail(G, cplx(0.0, 0.0));
        for (int j = c.m; j >= 0; --j) {
            const auto& fj = f[static_cast<std::size_t>(j)];
            for (std::size_t p = 0; p < G; ++p) acc[p] += fj[p] * std::exp(-eta * tail[p]);
            const auto& hj = h[static_cast<std::size_t>(j)];
            for (std::size_t p = 0; p < G; ++p) tail[p] += hj[p];
        }
        for (std::size_t p = 0; p < G; ++p) c.closed_form_gap = std::max(c.closed_form_gap, std::abs(acc[p] - F[p]));
    }

    for (std::size_t p = 0; p < G; ++p) {
        const double v = std::abs(F[p]);
        c.grid_sup = std::max(c.grid_sup, v);
        c.pad = std::max(c.pad, std::fabs(std::abs(F[(p + 1) % G]) - v));
    }
    c.sup_T1 = c.grid_sup + c.pad;

    fft::cvec spec = F;
    fft::forward(spec);
    c.deviations_ok = true;
    double weighted = 0.0;
    for (std::size_t k = 0; k <= N; ++k) {
        const cplx v = spec[wrap(-nf[k], G)] / static_cast<double>(G);
        c.t1_at_minus_n.push_back(v);
        const double dev = std::abs(v - u[k] / (k + 1.0));
        c.deviations.push_back(dev);
        weighted += std::abs(a[k]) * dev;
        if (dev > 0.5 / (k + 1.0)) c.deviations_ok = false;
    }
    c.sup_ok = c.grid_sup <= (2.0 / eta) * (1.0 + 1e-9);
    c.refined_bound = std::max(c.S - weighted, 0.0) / c.sup_T1;
    c.pass = c.sup_ok && c.deviations_ok;
    // with every deviation under 1/(2(k+1)) the pairing is at least S/2
    c.certified_bound = c.deviations_ok ? 0.5 * c.S / c.sup_T1 : c.refined_bound;
    out.t1 = std::move(F);
    return out;
}

bool close_rel(double x, double y, double tol) { return std::fabs(x - y) <= tol * std::max({std::fabs(x), std::fabs(y), 1e-300}); }

}  // namespace

fft::cvec analytic_completion(const std::vector<double>& samples) {
    const std::size_t G = samples.size();
    if (G < 8 || (G & (G - 1)) != 0) throw Error(ErrorKind::BadGridSize, "need a power of two >= 8, got " + std::to_string(G));
    fft::cvec z(G);
    for (std::size_t p = 0; p < G; ++p) z[p] = samples[p];
    fft::forward(z);
    const double inv = 1.0 / static_cast<double>(G);
    z[0] *= inv;
    z[G / 2] *= inv;
    for (std::size_t b = 1; b < G / 2; ++b) z[b] *= 2.0 * inv;
    for (std::size_t b = G / 2 + 1; b < G; ++b) z[b] = 0.0;
    fft::inverse(z);
    return z;
}

MpsCertificate build_dual(const TrigPoly& P, double eta, int oversample) { return construct(P, eta, oversample).cert; }

fft::cvec mps_t1_grid(const TrigPoly& P, double eta, int oversample) { return construct(P, eta, oversample).t1; }

MpsVerification verify_certificate(const MpsCertificate& cert, const TrigPoly& P) {
    MpsVerification v;
    auto re = construct(P, cert.eta, cert.oversample);
    const auto& c = re.cert;
    if (c.grid_size != cert.grid_size || c.deviations.size() != cert.deviations.size())
        throw Error(ErrorKind::CertificateMismatch, "certificate shape does not match the polynomial");
    if (!close_rel(c.sup_T1, cert.sup_T1, 1e-9) || !close_rel(c.S, cert.S, 1e-12) ||
        !close_rel(c.certified_bound, cert.certified_bound, 1e-9) || c.pass != cert.pass)
        throw Error(ErrorKind::CertificateMismatch, "sup, S, bound or flags differ from a rebuild");

    // T1^(-n_k) from the trigonometric interpolant sampled on a 4x finer grid
    const std::size_t G = c.grid_size, G4 = 4 * G;
    fft::cvec spec = re.t1;
    fft::forward(spec);
    fft::cvec fine(G4, cplx(0.0, 0.0));
    for (std::size_t b = 0; b < G; ++b) {
        const auto s = b < G / 2 ? static_cast<std::int64_t>(b) : static_cast<std::int64_t>(b) - static_cast<std::int64_t>(G);
        const auto g4 = static_cast<std::int64_t>(G4);
        fine[static_cast<std::size_t>(((s % g4) + g4) % g4)] = spec[b] / static_cast<double>(G);
    }
    fft::inverse(fine);
    auto nf = P.int_freqs();
    for (std::size_t k = 0; k < nf.size(); ++k) {
        // direct quadrature (1/G4) sum T1(p/G4) exp(2 pi i n_k p / G4)
        cplx s = 0.0;
        for (std::size_t p = 0; p < G4; ++p) {
            const double x = 2.0 * static_cast<double>((nf[k] * static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(G4)) / static_cast<double>(G4);
            s += fine[p] * cplx(cos_pi(x), sin_pi(x));
        }
        s /= static_cast<double>(G4);
        const double a = std::abs(P.coeffs()[k]);
        const cplx u = a > 0.0 ? std::conj(P.coeffs()[k]) / a : cplx(1.0, 0.0);
        const double dev = std::abs(s - u / (k + 1.0));
        v.max_deviation_gap = std::max(v.max_deviation_gap, std::fabs(dev - cert.deviations[k]));
    }
    if (v.max_deviation_gap > 1e-8) throw Error(ErrorKind::CertificateMismatch, "stored deviations do not reproduce");

    auto l1 = l1_certified(P, IntervalSpec{0.0, 1.0, true}, 1e-3);
    v.l1_value = l1.value;
    v.l1_error = l1.error_bound;
    if (cert.certified_bound > l1.value + l1.error_bound)
        throw Error(ErrorKind::CertificateMismatch, "certified bound exceeds the L1 norm");

    v.doubled_bound = construct(P, cert.eta, 2 * cert.oversample).cert.certified_bound;
    v.doubling_change = std::fabs(v.doubled_bound - cert.certified_bound);
    v.doubling_stable = v.doubling_change <= 1e-4;
    return v;
}

}  // namespace triglab
