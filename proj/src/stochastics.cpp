#include "triglab/stochastics.hpp"
#include "triglab/error.hpp"
#include "triglab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace triglab {

int rademacher(int k, double x) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "generation must be >= 0");
    const auto j = static_cast<std::int64_t>(std::floor(std::ldexp(x, k + 1)));
    return (j & 1) ? -1 : 1;
}

std::int64_t rademacher_inner(int k, int l) {
    if (k < 0 || l < 0 || k > 40 || l > 40) throw Error(ErrorKind::InvalidArgument, "generation outside 0..40");
    const int g = std::max(k, l) + 1;
    // cell c of width 2^{-g}: r_k is the parity of bit g-1-k of c
    std::int64_t s = 0;
    for (std::int64_t c = 0; c < (std::int64_t(1) << g); ++c) {
        const int a = ((c >> (g - 1 - k)) & 1) ? -1 : 1;
        const int b = ((c >> (g - 1 - l)) & 1) ? -1 : 1;
        s += a * b;
    }
    // s is 0 or 2^g
    return s / (std::int64_t(1) << g);
}

RademacherSeries rademacher_series(std::vector<cplx> coeffs) {
    RademacherSeries f;
    f.coeffs = std::move(coeffs);
    double s = 0.0;
    for (auto& c : f.coeffs) {
        s += std::norm(c);
        if (c.imag() != 0.0) f.real = false;
    }
    f.l2 = std::sqrt(s);
    return f;
}

double rademacher_norm(const RademacherSeries& f, double p) {
    const std::size_t len = f.coeffs.size();
    if (len > max_enumerated_terms) throw Error(ErrorKind::TooManyTerms, std::to_string(len) + " terms, at most 20");
    if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "p must be positive");
    if (len == 0) return 0.0;
    const std::size_t cells = std::size_t(1) << len;
    const double total = par::chunked_sum(cells, 4096, [&](std::size_t b, std::size_t e) {
        double s = 0.0;
        for (std::size_t c = b; c < e; ++c) {
            cplx z = 0.0;
            for (std::size_t k = 0; k < len; ++k) z += ((c >> k) & 1) ? -f.coeffs[k] : f.coeffs[k];
            s += std::pow(std::abs(z), p);
        }
        return s;
    });
    return std::pow(total / static_cast<double>(cells), 1.0 / p);
}

KhintchineCheck khintchine_check(const std::vector<cplx>& coeffs, int m) {
    if (m < 1 || m > 6) throw Error(ErrorKind::InvalidArgument, "m must lie in 1..6");
    const auto f = rademacher_series(coeffs);
    KhintchineCheck out;
    out.norm2m = rademacher_norm(f, 2.0 * m);
    out.bound = (f.real ? 1.0 : 2.0) * std::sqrt(static_cast<double>(m)) * f.l2;
    out.holds = out.norm2m <= out.bound * (1.0 + 1e-12);
    return out;
}

double khintchine_B4(bool real) { return (real ? 1.0 : 2.0) * std::sqrt(2.0); }

double khintchine_A(double p, bool real) {
    if (!(p > 0.0 && p < 2.0)) throw Error(ErrorKind::InvalidArgument, "A_p is for 0 < p < 2");
    return std::pow(khintchine_B4(real), (2.0 * p - 4.0) / p);
}

KhintchineLower khintchine_lower(const std::vector<cplx>& coeffs, double p) {
    const auto f = rademacher_series(coeffs);
    KhintchineLower out;
    out.norm = rademacher_norm(f, p);
    out.bound = khintchine_A(p, f.real) * f.l2;
    out.holds = out.norm >= out.bound * (1.0 - 1e-12);
    return out;
}

RieszProduct riesz_coeffs(const std::vector<std::int64_t>& n_seq, const std::vector<int>& signs, std::size_t depth) {
    if (n_seq.size() != signs.size()) throw Error(ErrorKind::LengthMismatch, "n_seq and signs differ in length");
    if (depth >= n_seq.size()) throw Error(ErrorKind::InvalidArgument, "depth must be below the sequence length");
    for (auto s : signs)
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +-1");
    for (std::size_t j = 0; j < n_seq.size(); ++j) {
        if (n_seq[j] <= 0) throw Error(ErrorKind::NotQuasiIndependent, "entries must be positive");
        if (j > 0 && n_seq[j] < 3 * n_seq[j - 1]) throw Error(ErrorKind::NotQuasiIndependent, "ratio below 3");
    }
    std::vector<double> head(n_seq.begin(), n_seq.begin() + static_cast<std::ptrdiff_t>(depth + 1));
    if (!quasi_independent(head, 64).independent) throw Error(ErrorKind::NotQuasiIndependent, "repeated signed sum");

    RieszProduct R;
    R.n.assign(n_seq.begin(), n_seq.begin() + static_cast<std::ptrdiff_t>(depth + 1));
    R.signs.assign(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(depth + 1));
    // (index -> (coefficient, number of factor choices landing there))
    std::map<std::int64_t, std::pair<double, std::size_t>> cur{{0, {1.0, 1}}};
    for (std::size_t j = 0; j <= depth; ++j) {
        std::map<std::int64_t, std::pair<double, std::size_t>> nxt;
        const double half = 0.5 * R.signs[j];
        for (auto& [k, v] : cur) {
            auto add = [&](std::int64_t idx, double c) {
                auto& slot = nxt[idx];
                slot.first += c;
                slot.second += v.second;
            };
            add(k, v.first);
            add(k + R.n[j], half * v.first);
            add(k - R.n[j], half * v.first);
        }
        cur = std::move(nxt);
    }
    for (auto& [k, v] : cur) {
        R.coeffs[k] = v.first;
        if (v.second > 1) ++R.collisions;
    }
    if (R.coeffs[0] != 1.0) throw Error(ErrorKind::NotQuasiIndependent, "gamma_0 differs from 1");
    for (std::size_t j = 0; j <= depth; ++j)
        if (R.coeffs[R.n[j]] != 0.5 * R.signs[j]) throw Error(ErrorKind::NotQuasiIndependent, "gamma_{n_j} differs from sign/2");
    return R;
}

LacunaryReport lacunary_check(const TrigPoly& P, double p, LacunaryMode mode, const LacunaryOptions& opt) {
    if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "p must be positive");
    const auto& f = P.freqs();
    LacunaryReport r;
    r.p = p;
    r.K = P.size();
    r.q = std::numeric_limits<double>::infinity();
    if (f.front() <= 0.0) throw Error(ErrorKind::NotLacunary, "frequencies must be positive");
    for (std::size_t k = 1; k < f.size(); ++k) r.q = std::min(r.q, f[k] / f[k - 1]);
    if (f.size() > 1 && !(r.q > 1.0)) throw Error(ErrorKind::NotLacunary, "ratio not above 1");
    r.l2 = P.l2_coeffs();
    r.lower_floor = opt.lower_floor;
    r.upper_ceiling = p <= 2.0 ? opt.upper_ceiling : std::numeric_limits<double>::infinity();

    if (mode == LacunaryMode::Periodic) {
        P.int_freqs();
        const IntervalSpec I{0.0, 1.0, true};
        if (p == 2.0) {
            auto v = l2_exact(P, I);
            r.norm = v.value;
        } else if (p == 1.0) {
            auto v = l1_certified(P, I, opt.rel_tol);
            r.norm = v.value;
            r.error_bound = v.error_bound;
        } else {
            auto v = lp_quadrature(P, I, p, opt.quad_samples);
            r.norm = v.value;
            r.error_bound = v.error_bound;
        }
    } else {
        if (p == 2.0) {
            // Besicovitch L2 of distinct frequencies is the coefficient l2 norm
            r.norm = r.l2;
        } else {
            auto prm = opt.besicovitch;
            prm.p = p;
            prm.certified = false;
            auto rep = besicovitch_estimate(P, BesicovitchStrategy::TSweep, prm);
            r.norm = rep.trend_estimate;
            r.error_bound = rep.samples.back().error_bound;
        }
    }
    r.ratio = r.norm / r.l2;
    r.within = r.ratio >= r.lower_floor && r.ratio <= r.upper_ceiling * (1.0 + 1e-12);
    return r;
}

}  // namespace triglab
