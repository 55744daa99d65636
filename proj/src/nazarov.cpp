#include "triglab/nazarov.hpp"
#include "triglab/error.hpp"
#include "triglab/fft.hpp"
#include "triglab/mps.hpp"
#include "triglab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace triglab {

namespace {

constexpr std::size_t max_grid = std::size_t(1) << 24;

void check_unit_gaps(const std::vector<double>& lams) {
    for (std::size_t k = 1; k < lams.size(); ++k)
        if (lams[k] - lams[k - 1] < 1.0 - 1e-12)
            throw Error(ErrorKind::GapTooSmall, "gap " + std::to_string(lams[k] - lams[k - 1]) + " below 1");
}

// everything that does not depend on eps
struct Prepared {
    SmoothingKernelParams params;
    ShiftedSystem sys;
    double L = 1.5;
    std::size_t G = 0;
    std::vector<cplx> w;                   // u_r / slot_r
    std::vector<NazarovBlock> blocks;
    std::vector<fft::cvec> f, h;           // grid samples per block
    std::vector<std::vector<cplx>> A;      // A_r(s) = sum_k a_k phihat(lambda_k - lambda_r + s/L), s = i - G/2
    std::vector<double> phihat_diag;       // phihat(lambda_k - lambda_r) flattened, k major
};

double grid_t(const Prepared& pr, std::size_t p) {
    return -0.5 * pr.L + static_cast<double>(p) * pr.L / static_cast<double>(pr.G);
}

Prepared prepare(const TrigPoly& P, double delta, int oversample) {
    if (oversample < 4) throw Error(ErrorKind::InvalidArgument, "oversample must be >= 4");
    Prepared pr;
    pr.sys = extend_and_shift(P, delta);
    pr.params = smoothing_params(delta);
    pr.L = 1.0 + delta;
    const auto& sys = pr.sys;
    const std::size_t n = sys.lambdas.size();
    const double span = sys.lambdas.back() - sys.lambdas.front();
    const double want = oversample * (std::ceil(span * pr.L) + sys.n_delta);
    if (want > static_cast<double>(max_grid)) throw Error(ErrorKind::GridOverflow, "grid would exceed 2^24");
    pr.G = std::max<std::size_t>(64, next_pow2(static_cast<std::size_t>(want)));
    if (pr.G > max_grid) throw Error(ErrorKind::GridOverflow, "grid would exceed 2^24");
    const std::size_t G = pr.G;

    pr.w.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double a = std::abs(sys.coeffs[r]);
        const cplx u = a > 0.0 ? std::conj(sys.coeffs[r]) / a : cplx(1.0, 0.0);
        pr.w[r] = u / static_cast<double>(sys.slots[r]);
    }

    for (int j = sys.m_delta; j < sys.n_delta; ++j) {
        NazarovBlock b;
        b.j = j;
        for (std::size_t r = 0; r < n; ++r)
            if (sys.slots[r] >= (std::int64_t(1) << j) && sys.slots[r] < (std::int64_t(1) << (j + 1))) b.members.push_back(r);
        if (b.members.empty()) continue;
        // ||f_j||^2 on I = L sum w w' sinc(pi L (l - l'))
        double e = 0.0;
        for (auto r : b.members)
            for (auto r2 : b.members)
                e += (pr.w[r] * std::conj(pr.w[r2])).real() * pr.L * sinc_pi(pr.L * (sys.lambdas[r] - sys.lambdas[r2]));
        b.l2 = std::sqrt(std::max(e, 0.0));
        b.l2_bound = std::pow(2.0, -0.5 * j) * std::sqrt(pr.L + 1.0);

        fft::cvec fj(G);
#pragma omp parallel for schedule(static)
        for (long long p = 0; p < static_cast<long long>(G); ++p) {
            const double t = grid_t(pr, static_cast<std::size_t>(p));
            cplx s = 0.0;
            for (auto r : b.members) {
                const double x = -2.0 * sys.lambdas[r] * t;
                s += pr.w[r] * cplx(cos_pi(x), sin_pi(x));
            }
            fj[static_cast<std::size_t>(p)] = s;
        }
        std::vector<double> mod(G);
        for (std::size_t p = 0; p < G; ++p) mod[p] = std::abs(fj[p]);
        pr.f.push_back(std::move(fj));
        pr.h.push_back(analytic_completion(mod));
        pr.blocks.push_back(std::move(b));
    }

    pr.phihat_diag.resize(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r)
            pr.phihat_diag[k * n + r] = phi_delta_hat(pr.params, sys.lambdas[k] - sys.lambdas[r]);

    pr.A.assign(n, std::vector<cplx>(G, cplx(0.0, 0.0)));
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(n); ++r) {
        auto& row = pr.A[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < G; ++i) {
            const double s = static_cast<double>(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(G / 2));
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += sys.coeffs[k] * phi_delta_hat(pr.params, sys.lambdas[k] - sys.lambdas[static_cast<std::size_t>(r)] + s / pr.L);
            row[i] = acc;
        }
    }
    return pr;
}

struct Run {
    fft::cvec T;                          // T~ on the grid
    std::vector<std::vector<cplx>> C;     // coefficients of g_j - 1, s = i - G/2
    double max_partial_sup = 0.0;
    double closed_form_gap = 0.0;
    double e2 = 0.0;
};

Run run(const Prepared& pr, double eps) {
    Run out;
    const std::size_t G = pr.G, nb = pr.blocks.size();
    fft::cvec F = pr.f[0];
    for (auto& z : F) out.max_partial_sup = std::max(out.max_partial_sup, std::abs(z));
    for (std::size_t b = 1; b < nb; ++b)
        for (std::size_t p = 0; p < G; ++p) {
            F[p] = F[p] * std::exp(-eps * pr.h[b][p]) + pr.f[b][p];
            out.max_partial_sup = std::max(out.max_partial_sup, std::abs(F[p]));
        }

    // g_j = exp(-eps sum_{l>j} h_l), walked from the top block down
    out.C.assign(nb, std::vector<cplx>(G, cplx(0.0, 0.0)));
    fft::cvec tail(G, cplx(0.0, 0.0)), acc(G, cplx(0.0, 0.0));
    cplx e2 = 0.0;
    for (std::size_t bb = nb; bb-- > 0;) {
        fft::cvec g(G);
        for (std::size_t p = 0; p < G; ++p) {
            g[p] = std::exp(-eps * tail[p]);
            acc[p] += pr.f[bb][p] * g[p];
            g[p] -= 1.0;
        }
        if (bb + 1 < nb) {
            fft::forward(g);
            auto& C = out.C[bb];
            for (std::size_t i = 0; i < G; ++i) {
                const auto s = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(G / 2);
                const auto bin = static_cast<std::size_t>(((s % static_cast<std::int64_t>(G)) + static_cast<std::int64_t>(G)) % static_cast<std::int64_t>(G));
                C[i] = ((s & 1) ? -1.0 : 1.0) * g[bin] / static_cast<double>(G);
            }
            for (auto r : pr.blocks[bb].members) {
                cplx z = 0.0;
                for (std::size_t i = 0; i < G; ++i) z += C[i] * pr.A[r][i];
                e2 += pr.w[r] * z;
            }
        }
        for (std::size_t p = 0; p < G; ++p) tail[p] += pr.h[bb][p];
    }
    for (std::size_t p = 0; p < G; ++p) out.closed_form_gap = std::max(out.closed_form_gap, std::abs(acc[p] - F[p]));
    out.e2 = std::abs(e2);
    out.T = std::move(F);
    return out;
}

}  // namespace

ShiftedSystem extend_and_shift(const TrigPoly& P, double delta, std::int64_t N_cap) {
    if (!(delta > 0.0 && delta <= 0.75)) throw Error(ErrorKind::InvalidDelta, "delta must lie in (0, 0.75]");
    check_unit_gaps(P.freqs());
    ShiftedSystem s;
    s.delta = delta;
    const double need = std::pow(delta, -3.5);
    while (static_cast<double>(s.N_delta) < need * (1.0 - 1e-12)) {
        s.N_delta *= 2;
        ++s.m_delta;
        if (s.N_delta > N_cap) throw Error(ErrorKind::ResourceLimit, "N_delta above cap " + std::to_string(N_cap));
    }
    const auto N = static_cast<std::int64_t>(P.size()) - 1;
    s.n_delta = s.m_delta;
    while ((std::int64_t(1) << s.n_delta) - 1 < N + s.N_delta) ++s.n_delta;
    s.lambdas = P.freqs();
    s.coeffs = P.coeffs();
    for (std::int64_t k = 0; k <= N; ++k) {
        s.slots.push_back(k + s.N_delta);
        const double a = std::abs(s.coeffs[static_cast<std::size_t>(k)]);
        s.S_delta += a / static_cast<double>(k + s.N_delta);
        s.S += a / static_cast<double>(k + 1);
    }
    return s;
}

std::pair<double, double> hilbert_check(const std::vector<double>& lams, const std::vector<cplx>& zs) {
    if (lams.size() != zs.size()) throw Error(ErrorKind::LengthMismatch, "lams and zs differ in length");
    std::vector<std::size_t> ord(lams.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return lams[x] < lams[y]; });
    for (std::size_t i = 1; i < ord.size(); ++i)
        if (lams[ord[i]] - lams[ord[i - 1]] < 1.0 - 1e-12) throw Error(ErrorKind::GapTooSmall, "frequencies closer than 1");
    cplx s = 0.0;
    double rhs = 0.0;
    for (std::size_t k = 0; k < lams.size(); ++k) {
        rhs += std::norm(zs[k]);
        for (std::size_t l = 0; l < lams.size(); ++l)
            if (l != k) s += zs[k] * std::conj(zs[l]) / (lams[k] - lams[l]);
    }
    return {std::abs(s), pi * rhs};
}

NazarovCertificate build_dual_nazarov(const TrigPoly& P, double delta, std::optional<double> eps, int oversample) {
    const Prepared pr = prepare(P, delta, oversample);
    const auto& sys = pr.sys;
    const std::size_t n = sys.lambdas.size();

    NazarovCertificate c;
    c.params = pr.params;
    c.system = sys;
    c.interval_length = pr.L;
    c.oversample = oversample;
    c.grid_size = pr.G;
    c.blocks = pr.blocks;
    c.blocks_ok = true;
    for (auto& b : c.blocks)
        if (b.l2 > b.l2_bound * (1.0 + 1e-6)) c.blocks_ok = false;

    c.alpha_emp = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) s += std::fabs(pr.phihat_diag[k * n + j]) / static_cast<double>(sys.slots[j]);
        c.alpha_emp = std::min(c.alpha_emp, 1.0 - static_cast<double>(sys.slots[k]) * s);
    }
    c.alpha_positive = c.alpha_emp > 0.0;

    cplx e1 = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) e1 += sys.coeffs[k] * pr.w[r] * pr.phihat_diag[k * n + r];
    c.e1 = std::abs(e1);

    c.eps_cap = std::sqrt(pr.L) * (std::sqrt(2.0) - 1.0) / std::sqrt(2.0 * (pr.L + 1.0));
    const double target = (2.0 / 3.0) * c.alpha_emp * sys.S_delta;
    if (eps) {
        if (!(*eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
        c.eps = *eps;
        c.eps_given = true;
    } else if (run(pr, c.eps_cap).e2 <= target) {
        c.eps = c.eps_cap;
    } else {
        double lo = 0.0, hi = c.eps_cap;
        for (int it = 0; it < 8; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (run(pr, mid).e2 <= target) lo = mid;
            else hi = mid;
        }
        c.eps = lo > 0.0 ? lo : hi;
    }
    c.eps_ok = c.eps <= c.eps_cap * (1.0 + 1e-12);

    const Run R = run(pr, c.eps);
    c.e2 = R.e2;
    c.max_partial_sup = R.max_partial_sup;
    c.closed_form_gap = R.closed_form_gap;
    const std::size_t G = pr.G;
    for (std::size_t p = 0; p < G; ++p) {
        const double v = std::abs(R.T[p]);
        c.grid_sup = std::max(c.grid_sup, v);
        c.pad = std::max(c.pad, std::fabs(std::abs(R.T[(p + 1) % G]) - v));
    }
    c.sup_Ttilde = c.grid_sup + c.pad;
    c.damping_ok = c.max_partial_sup <= 2.0 / c.eps + 1e-6;
    c.e1_ok = c.e1 >= c.alpha_emp * sys.S_delta * (1.0 - 1e-12);
    c.e2_ok = c.e2 <= target;

    const double slack = std::max(c.alpha_emp - c.e2 / sys.S_delta, 0.0);
    c.certified_bound = sys.S_delta * slack / (c.sup_Ttilde * pr.params.sup_bound);
    c.harmonic_bound = c.certified_bound / static_cast<double>(sys.N_delta);
    c.realized_constant = c.certified_bound > 0.0 ? std::pow(delta, 7.5) * sys.S / c.certified_bound
                                                  : std::numeric_limits<double>::infinity();
    c.pass = c.alpha_positive && c.e1_ok && c.e2_ok && c.damping_ok && c.blocks_ok && c.eps_ok;
    return c;
}

PairingCheck pairing(const NazarovCertificate& cert, const TrigPoly& P) {
    const auto& sys = cert.system;
    if (P.size() != sys.lambdas.size() || P.freqs() != sys.lambdas || P.coeffs() != sys.coeffs)
        throw Error(ErrorKind::CertificateMismatch, "certificate was built for another polynomial");
    const Prepared pr = prepare(P, sys.delta, cert.oversample);
    if (pr.G != cert.grid_size) throw Error(ErrorKind::CertificateMismatch, "grid size differs from a rebuild");
    const Run R = run(pr, cert.eps);

    const std::size_t G2 = 2 * pr.G, nb = pr.blocks.size();
    const double L = pr.L, hstep = L / static_cast<double>(G2);

    // g_j - 1 interpolants on the fine grid
    std::vector<fft::cvec> gm(nb);
    for (std::size_t b = 0; b + 1 < nb; ++b) {
        fft::cvec z(G2, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < pr.G; ++i) {
            const auto s = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(pr.G / 2);
            const auto g2 = static_cast<std::int64_t>(G2);
            z[static_cast<std::size_t>(((s % g2) + g2) % g2)] = ((s & 1) ? -1.0 : 1.0) * R.C[b][i];
        }
        fft::inverse(z);
        gm[b] = std::move(z);
    }

    // phi is even, so only half the nodes need the expensive evaluation
    std::vector<double> phi(G2 + 1, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long q = 0; q <= static_cast<long long>(G2 / 2); ++q) {
        const double t = -0.5 * L + static_cast<double>(q) * hstep;
        phi[static_cast<std::size_t>(q)] = phi_delta(pr.params, t);
    }
    for (std::size_t q = G2 / 2 + 1; q <= G2; ++q) phi[q] = phi[G2 - q];

    cplx i1 = 0.0, i2 = 0.0;
    for (std::size_t q = 0; q < G2; ++q) {
        if (phi[q] == 0.0) continue;
        const double t = -0.5 * L + static_cast<double>(q) * hstep;
        cplx Td = 0.0, rem = 0.0;
        for (std::size_t b = 0; b < nb; ++b) {
            cplx fj = 0.0;
            for (auto r : pr.blocks[b].members) {
                const double x = -2.0 * sys.lambdas[r] * t;
                fj += pr.w[r] * cplx(cos_pi(x), sin_pi(x));
            }
            Td += fj;
            if (b + 1 < nb) rem += fj * gm[b][q];
        }
        const cplx Pt = P.eval(t);
        i1 += Td * Pt * phi[q];
        i2 += rem * Pt * phi[q];
    }
    PairingCheck out;
    out.e1 = std::abs(i1) * hstep;
    out.e2 = std::abs(i2) * hstep;
    auto match = [](double x, double y) { return std::fabs(x - y) <= 1e-6 * std::max(std::fabs(x), std::fabs(y)) + 1e-14; };
    const double aS = cert.alpha_emp * sys.S_delta;
    out.recheck = match(out.e1, cert.e1) && match(out.e2, cert.e2) && cert.e1 >= aS * (1.0 - 1e-12) &&
                  cert.e2 <= (2.0 / 3.0) * aS;
    return out;
}

}  // namespace triglab
