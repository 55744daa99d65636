#include "triglab/hanson.hpp"
#include "triglab/error.hpp"
#include "triglab/numeric.hpp"
#include "triglab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

namespace triglab {

namespace {

constexpr double l1_tol = 1e-3;

std::int64_t mod_floor(std::int64_t x, std::int64_t q) { return ((x % q) + q) % q; }

std::vector<std::pair<std::int64_t, cplx>> terms_of(const TrigPoly& P) {
    auto nf = P.int_freqs();
    std::vector<std::pair<std::int64_t, cplx>> t;
    for (std::size_t k = 0; k < nf.size(); ++k) t.emplace_back(nf[k], P.coeffs()[k]);
    return t;
}

TrigPoly shifted(const TrigPoly& P, std::int64_t c) {
    auto t = terms_of(P);
    for (auto& e : t) e.first += c;
    return from_int_terms(t);
}

double extraction_constant(double delta) { return 32.0 * pi * (2.0 + std::log(1.0 + 2.0 / delta)); }

CertifiedValue l1(const TrigPoly& P) { return l1_certified(P, IntervalSpec{0.0, 1.0, true}, l1_tol); }

void check_structured(const StructuredPoly& F) {
    if (F.D <= 0 || F.d < 0) throw Error(ErrorKind::InvalidArgument, "need D > 0 and d >= 0");
    if (F.I.empty() || F.I.size() != F.f.size()) throw Error(ErrorKind::LengthMismatch, "one f_k per element of I");
    for (auto& row : F.f)
        if (row.size() != static_cast<std::size_t>(2 * F.d + 1))
            throw Error(ErrorKind::LengthMismatch, "f_k needs 2d+1 coefficients");
}

TrigPoly structured_subset(const StructuredPoly& F, std::int64_t q, std::int64_t s, bool all) {
    std::vector<std::pair<std::int64_t, cplx>> t;
    for (std::size_t i = 0; i < F.I.size(); ++i) {
        if (!all && mod_floor(F.I[i] - s, q) != 0) continue;
        for (std::int64_t n = -F.d; n <= F.d; ++n) t.emplace_back(F.D * F.I[i] + n, F.f[i][static_cast<std::size_t>(n + F.d)]);
    }
    if (t.empty()) t.emplace_back(0, 0.0);
    return from_int_terms(t);
}

}  // namespace

CongruenceSplit congruence_split(std::vector<std::int64_t> I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (I.size() < 8) throw Error(ErrorKind::TooSmall, "need at least 8 distinct integers");
    CongruenceSplit out;
    std::int64_t q = 1;
    for (int j = 1; j < 31; ++j) {
        q *= 4;
        std::map<std::int64_t, std::size_t> count;
        for (auto k : I) ++count[mod_floor(k, q)];
        std::int64_t best = 0;
        std::size_t size = 0;
        for (auto& [r, c] : count)
            if (c > size) {  // map order gives the smallest residue on ties
                size = c;
                best = r;
            }
        if (size <= (std::size_t(1) << j)) {
            out.q = q;
            out.s = best;
            for (auto k : I)
                if (mod_floor(k, q) == best) out.class_members.push_back(k);
            break;
        }
    }
    if (out.class_members.empty()) throw Error(ErrorKind::ResourceLimit, "no split below 4^30");
    out.lower = std::cbrt(static_cast<double>(I.size())) / 8.0;
    out.upper = std::sqrt(static_cast<double>(out.q));
    const double c = static_cast<double>(out.class_members.size());
    out.bounds_ok = out.lower <= c && c <= out.upper;
    return out;
}

RiemannL1 riemann_l1(const TrigPoly& P, std::size_t N) {
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
    auto nf = P.int_freqs();
    std::int64_t d = 0;
    for (auto n : nf) d = std::max<std::int64_t>(d, n < 0 ? -n : n);
    RiemannL1 r;
    r.sum = sampling::harmonic_abs_pow_mean(P, N, 1.0);
    r.bound = 2.0 * pi * static_cast<double>(d) / static_cast<double>(N);
    return r;
}

TrigPoly periodize(const DiscreteKernel& K, const TrigPoly& P, std::int64_t R, std::int64_t S) {
    if (R < 1 || S < 1) throw Error(ErrorKind::InvalidArgument, "R and S must be positive");
    if (K.lo < -R || K.hi() > S - 1) throw Error(ErrorKind::WindowMismatch, "kernel support outside [-R, S-1]");
    const std::int64_t per = R + S;
    auto t = terms_of(P);
    std::vector<std::pair<std::int64_t, cplx>> out;
    for (auto& [m, a] : t) {
        const std::int64_t l = mod_floor(m + R, per) - R;
        const double kv = K.at(l);
        if (kv != 0.0 && a != cplx(0.0, 0.0)) out.emplace_back(m, a * kv);
    }
    if (out.empty()) out.emplace_back(0, 0.0);
    return from_int_terms(out);
}

FilterCheck periodize_filter(const DiscreteKernel& K, const TrigPoly& P, std::int64_t R, std::int64_t S) {
    FilterCheck out{periodize(K, P, R, S), {}, {}, 0.0, 0.0, false};
    const std::int64_t per = R + S;
    double acc = 0.0;
    for (std::int64_t l = -R; l <= S - 1; ++l) acc += std::abs(K.transform(static_cast<double>(l) / static_cast<double>(per)));
    out.factor = acc / static_cast<double>(per);
    out.lhs = l1(out.filtered);
    out.base = l1(P);
    out.rhs = out.factor * out.base.value;
    out.holds = out.lhs.value <= out.rhs + out.lhs.error_bound + out.factor * out.base.error_bound;
    return out;
}

TrigPoly structured_poly(const StructuredPoly& F) {
    check_structured(F);
    return structured_subset(F, 1, 0, true);
}

TrigPoly structured_row(const StructuredPoly& F, std::size_t i) {
    check_structured(F);
    std::vector<std::pair<std::int64_t, cplx>> t;
    for (std::int64_t n = -F.d; n <= F.d; ++n) t.emplace_back(n, F.f[i][static_cast<std::size_t>(n + F.d)]);
    return from_int_terms(t);
}

StructuredPoly structured_from_set(const HansonSet& set) {
    family(set);  // structural validation
    StructuredPoly F;
    F.D = set.D;
    F.d = set.d;
    F.I = set.I;
    for (std::size_t i = 0; i < set.I.size(); ++i) {
        std::vector<cplx> row(static_cast<std::size_t>(2 * set.d + 1), 0.0);
        for (auto a : (set.A.size() == 1 ? set.A[0] : set.A[i])) row[static_cast<std::size_t>(a + set.d)] = 1.0;
        F.f.push_back(std::move(row));
    }
    return F;
}

ExtractionCheck extraction_check(const StructuredPoly& F, double delta, std::int64_t q, std::int64_t s) {
    check_structured(F);
    if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    if (static_cast<double>(F.D) < (2.0 + 2.0 * delta) * static_cast<double>(F.d) + 4.0)
        throw Error(ErrorKind::InvalidArgument, "need (2+2 delta) d + 4 <= D");
    if (static_cast<double>(q) < 4.0 * pi) throw Error(ErrorKind::InvalidArgument, "need q >= 4 pi");

    ExtractionCheck out;
    out.q = q;
    out.s = s;
    const TrigPoly full = structured_poly(F);
    const TrigPoly direct = structured_subset(F, q, s, false);

    // same extraction through the periodized kernel: move class s to 0, filter with period qD, move back
    const auto N = F.d;
    const auto M = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(delta * static_cast<double>(F.d) / 2.0)));
    const DiscreteKernel K = hanson_kernel(static_cast<int>(M), static_cast<int>(N));
    const std::int64_t per = q * F.D, R = per / 2, S = per - R;
    const TrigPoly via = shifted(periodize(K, shifted(full, -F.D * s), R, S), F.D * s);
    std::map<std::int64_t, cplx> diff;
    for (auto& [m, a] : terms_of(direct)) diff[m] += a;
    for (auto& [m, a] : terms_of(via)) diff[m] -= a;
    for (auto& [m, a] : diff) out.filter_gap = std::max(out.filter_gap, std::abs(a));

    const auto lhs = l1(direct), rhs = l1(full);
    out.lhs = lhs.value;
    out.full = rhs.value;
    out.constant = extraction_constant(delta);
    out.rhs = out.constant * rhs.value;
    out.holds = lhs.value <= out.rhs + lhs.error_bound + out.constant * rhs.error_bound;
    return out;
}

ClassSumSides class_sum_sides(const StructuredPoly& F, double delta, std::int64_t q, std::int64_t s) {
    check_structured(F);
    if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    ClassSumSides out;
    out.q = q;
    out.s = s;
    out.applicable = static_cast<double>(q) > 4.0 * pi;
    std::vector<std::pair<std::int64_t, std::size_t>> cls;
    for (std::size_t i = 0; i < F.I.size(); ++i)
        if (mod_floor(F.I[i] - s, q) == 0) cls.emplace_back(F.I[i], i);
    std::sort(cls.begin(), cls.end());
    const double tail = 2.0 * pi * static_cast<double>(F.d) / (static_cast<double>(q) * static_cast<double>(F.D));
    double acc = 0.0;
    for (std::size_t j = 0; j < cls.size(); ++j)
        acc += l1(structured_row(F, cls[j].second)).value * (C_MPS / (2.0 * static_cast<double>(j + 1)) - tail);
    out.rhs = acc / extraction_constant(delta);
    const auto v = l1(structured_poly(F));
    out.lhs = v.value;
    out.holds = v.value + v.error_bound >= out.rhs;
    return out;
}

HansonReport hanson_demo(const HansonSet& set) {
    if (!(set.delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    std::size_t total = 0;
    for (std::size_t i = 0; i < set.I.size(); ++i) total += (set.A.size() == 1 ? set.A[0] : set.A[i]).size();
    if (total > (std::size_t(1) << 16)) throw Error(ErrorKind::ResourceLimit, "more than 2^16 frequencies");
    const StructuredPoly F = structured_from_set(set);

    HansonReport r;
    r.m = static_cast<std::int64_t>(set.I.size());
    r.n = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < set.I.size(); ++i)
        r.n = std::min<std::int64_t>(r.n, static_cast<std::int64_t>((set.A.size() == 1 ? set.A[0] : set.A[i]).size()));

    const auto v = l1(structured_poly(F));
    r.l1_norm = v.value;
    r.l1_error = v.error_bound;
    for (std::size_t i = 0; i < F.I.size(); ++i) r.row_norms.push_back(l1(structured_row(F, i)).value);

    const double lm = std::log(static_cast<double>(r.m)), ln = std::log(static_cast<double>(r.n));
    r.theorem_bound = C_MPS * C_MPS / (std::pow(std::pow(2.0, 9) * pi, 2) * (2.0 + std::log(1.0 + 2.0 / set.delta))) * lm * ln;
    const double base = pi * pi * pi * std::pow(2.0, 21);
    r.threshold_n_cube = base * std::pow(C_MPS, 3) * ln * ln * ln;
    r.threshold_m_cube = r.threshold_n_cube * lm * lm * lm;
    r.threshold_n_inv_cube = base * std::pow(C_MPS, -3) * ln * ln * ln;
    r.threshold_m_inv_cube = r.threshold_n_inv_cube * lm * lm * lm;
    r.hypothesis_cube = static_cast<double>(r.n) >= r.threshold_n_cube && static_cast<double>(r.m) >= r.threshold_m_cube;
    r.hypothesis_inv_cube =
        static_cast<double>(r.n) >= r.threshold_n_inv_cube && static_cast<double>(r.m) >= r.threshold_m_inv_cube;
    r.inequality_holds = r.l1_norm + r.l1_error >= r.theorem_bound;
    if (!r.hypothesis_cube || !r.hypothesis_inv_cube) r.note = "hypothesis not satisfied; inequality checked anyway";

    if (set.I.size() >= 8) {
        r.split = congruence_split(set.I);
        r.class_sum = class_sum_sides(F, set.delta, r.split->q, r.split->s);
    }
    return r;
}

HansonSet demo_set(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "m and n must be positive");
    HansonSet s;
    s.d = n;
    s.D = 3 * n + 1;
    s.delta = 1.0;
    for (std::int64_t k = 0; k < m; ++k) s.I.push_back(k);
    std::vector<std::int64_t> A;
    for (std::int64_t a = 0; a < n; ++a) A.push_back(a);
    s.A = {A};
    return s;
}

}  // namespace triglab
