#include "triglab/trigpoly.hpp"
#include "triglab/error.hpp"
#include "triglab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace triglab {

TrigPoly::TrigPoly(std::vector<double> freqs, std::vector<cplx> coeffs)
    : freqs_(std::move(freqs)), coeffs_(std::move(coeffs)) {
    if (freqs_.empty() || freqs_.size() != coeffs_.size())
        throw Error(ErrorKind::LengthMismatch, "freqs and coeffs need the same nonzero length");
    for (std::size_t k = 0; k < freqs_.size(); ++k) {
        if (!std::isfinite(freqs_[k]) || !std::isfinite(coeffs_[k].real()) || !std::isfinite(coeffs_[k].imag()))
            throw Error(ErrorKind::NonFiniteValue, "entry " + std::to_string(k));
    }
    gap_.gamma = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < freqs_.size(); ++k) {
        double g = freqs_[k] - freqs_[k - 1];
        if (!(g > 0.0))
            throw Error(ErrorKind::NonIncreasingFrequencies, "at index " + std::to_string(k));
        gap_.gamma = std::min(gap_.gamma, g);
    }
    gap_.is_one_separated = gap_.gamma >= 1.0;
    harmonic_ = std::all_of(freqs_.begin(), freqs_.end(), [](double f) { return near_integer(f); });
}

std::vector<std::int64_t> TrigPoly::int_freqs() const {
    if (!harmonic_) throw Error(ErrorKind::NonIntegerFrequencies, "polynomial is not harmonic");
    std::vector<std::int64_t> out(freqs_.size());
    for (std::size_t k = 0; k < freqs_.size(); ++k) out[k] = static_cast<std::int64_t>(std::llround(freqs_[k]));
    return out;
}

cplx TrigPoly::eval(double t) const {
    cplx s = 0.0;
    for (std::size_t k = 0; k < freqs_.size(); ++k) {
        // 2 lambda t reduced exactly before the trig call
        double x = 2.0 * freqs_[k] * t;
        s += coeffs_[k] * cplx(cos_pi(x), sin_pi(x));
    }
    return s;
}

double TrigPoly::l1_coeffs() const {
    double s = 0.0;
    for (auto& c : coeffs_) s += std::abs(c);
    return s;
}

double TrigPoly::l2_coeffs() const {
    double s = 0.0;
    for (auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

TrigPoly make(std::vector<double> freqs, std::vector<cplx> coeffs) {
    return TrigPoly(std::move(freqs), std::move(coeffs));
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    std::vector<double> f;
    std::vector<cplx> c;
    std::size_t i = 0, j = 0;
    const auto& fa = a.freqs();
    const auto& fb = b.freqs();
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i] < fb[j])) {
            f.push_back(fa[i]);
            c.push_back(a.coeffs()[i++]);
        } else if (i == fa.size() || fb[j] < fa[i]) {
            f.push_back(fb[j]);
            c.push_back(b.coeffs()[j++]);
        } else {
            f.push_back(fa[i]);
            c.push_back(a.coeffs()[i++] + b.coeffs()[j++]);
        }
    }
    return TrigPoly(std::move(f), std::move(c));
}

TrigPoly shift_freqs(const TrigPoly& p, double c) {
    std::vector<double> f = p.freqs();
    for (auto& x : f) x += c;
    return TrigPoly(std::move(f), p.coeffs());
}

TrigPoly from_int_terms(const std::vector<std::pair<std::int64_t, cplx>>& terms) {
    std::map<std::int64_t, cplx> acc;
    for (auto& [n, a] : terms) acc[n] += a;
    if (acc.empty()) throw Error(ErrorKind::LengthMismatch, "no terms");
    std::vector<double> f;
    std::vector<cplx> c;
    for (auto& [n, a] : acc) {
        f.push_back(static_cast<double>(n));
        c.push_back(a);
    }
    return TrigPoly(std::move(f), std::move(c));
}

std::vector<double> counterexample_coeffs(double alpha, double r, int m) {
    std::vector<double> c(static_cast<std::size_t>(m) + 1);
    double v = 1.0;
    for (int n = 0; n <= m; ++n) {
        c[static_cast<std::size_t>(n)] = v;
        // (-alpha)_{n+1}/(n+1)! = (-alpha)_n/n! * (-alpha - n)/(n+1)
        v *= (-alpha - n) / (n + 1.0) * r;
    }
    return c;
}

namespace {

struct FamilyBuilder {
    TrigPoly operator()(const Dirichlet& s) const {
        if (s.N < 0) throw Error(ErrorKind::InvalidFamilyParameter, "Dirichlet N < 0");
        std::vector<double> f;
        for (int k = -s.N; k <= s.N; ++k) f.push_back(k);
        return TrigPoly(f, std::vector<cplx>(f.size(), 1.0));
    }
    TrigPoly operator()(const Fejer& s) const {
        if (s.L < 0) throw Error(ErrorKind::InvalidFamilyParameter, "Fejer L < 0");
        std::vector<double> f;
        std::vector<cplx> c;
        for (int k = -s.L; k <= s.L; ++k) {
            f.push_back(k);
            c.push_back(1.0 - std::abs(k) / (s.L + 1.0));
        }
        return TrigPoly(f, c);
    }
    TrigPoly operator()(const Newman& s) const {
        if (s.N < 0) throw Error(ErrorKind::InvalidFamilyParameter, "Newman N < 0");
        std::vector<double> f;
        std::vector<cplx> c;
        const std::int64_t M = s.N + 1;
        for (std::int64_t j = 0; j <= s.N; ++j) {
            f.push_back(static_cast<double>(j));
            // omega^{j^2} with omega = exp(i pi/(N+1)); reduce j^2 mod 2(N+1) first
            const double e = static_cast<double>((j * j) % (2 * M)) / static_cast<double>(M);
            c.emplace_back(cos_pi(e), sin_pi(e));
        }
        return TrigPoly(f, c);
    }
    TrigPoly operator()(const Lacunary& s) const {
        if (s.K < 1) throw Error(ErrorKind::InvalidFamilyParameter, "Lacunary K < 1");
        if (!(s.q > 1.0)) throw Error(ErrorKind::InvalidFamilyParameter, "Lacunary q <= 1");
        if (!s.coeffs.empty() && static_cast<int>(s.coeffs.size()) != s.K)
            throw Error(ErrorKind::InvalidFamilyParameter, "Lacunary coeffs length != K");
        std::vector<double> f;
        double v = 1.0;
        for (int k = 0; k < s.K; ++k) {
            f.push_back(s.scale * v);
            v *= s.q;
        }
        std::vector<cplx> c = s.coeffs.empty() ? std::vector<cplx>(f.size(), 1.0) : s.coeffs;
        return TrigPoly(f, c);
    }
    TrigPoly operator()(const HansonSet& s) const {
        if (s.d < 0 || s.D <= 0) throw Error(ErrorKind::InvalidFamilyParameter, "Hanson D, d");
        if (!(static_cast<double>(s.D) > (2.0 + s.delta) * static_cast<double>(s.d)))
            throw Error(ErrorKind::InvalidFamilyParameter, "need D > (2+delta) d");
        if (s.I.empty()) throw Error(ErrorKind::InvalidFamilyParameter, "empty index set");
        if (s.A.size() != 1 && s.A.size() != s.I.size())
            throw Error(ErrorKind::InvalidFamilyParameter, "need one A_k per k or one shared subset");
        std::vector<std::pair<std::int64_t, cplx>> terms;
        for (std::size_t i = 0; i < s.I.size(); ++i) {
            const auto& Ak = s.A.size() == 1 ? s.A[0] : s.A[i];
            for (auto a : Ak) {
                if (a < -s.d || a > s.d) throw Error(ErrorKind::InvalidFamilyParameter, "A_k outside {-d..d}");
                terms.emplace_back(s.I[i] * s.D + a, 1.0);
            }
        }
        std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.first < y.first; });
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (terms[i].first == terms[i - 1].first)
                throw Error(ErrorKind::InvalidFamilyParameter, "repeated element in I or A_k");
        return from_int_terms(terms);
    }
    TrigPoly operator()(const InghamCounterexample& s) const {
        if (!(s.alpha > 0.0 && s.alpha < 1.0)) throw Error(ErrorKind::InvalidFamilyParameter, "alpha outside (0,1)");
        if (!(s.r > 0.0 && s.r < 1.0)) throw Error(ErrorKind::InvalidFamilyParameter, "r outside (0,1)");
        if (s.m < 0) throw Error(ErrorKind::InvalidFamilyParameter, "m < 0");
        auto c = counterexample_coeffs(s.alpha, s.r, s.m);
        const double h = 0.5 * (s.alpha + 1.0);
        std::vector<double> f;
        std::vector<cplx> a;
        // negative side first so frequencies stay increasing: -(n + h)
        for (int n = s.m; n >= 0; --n) {
            f.push_back(-(n + h));
            a.push_back(c[static_cast<std::size_t>(n)]);
        }
        for (int n = 0; n <= s.m; ++n) {
            f.push_back(n + h);
            a.push_back(c[static_cast<std::size_t>(n)]);
        }
        return TrigPoly(f, a);
    }
};

bool same_sum(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// decode base-3 index into a pattern of -1,0,1
std::vector<int> decode3(std::uint64_t idx, std::size_t len) {
    std::vector<int> p(len);
    for (std::size_t i = 0; i < len; ++i) {
        p[i] = static_cast<int>(idx % 3) - 1;
        idx /= 3;
    }
    return p;
}

QuasiResult brute_force(const std::vector<double>& seq, double tol) {
    const std::size_t len = seq.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    std::vector<std::pair<double, std::uint64_t>> sums;
    sums.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto p = decode3(idx, len);
        double s = 0.0;
        for (std::size_t i = 0; i < len; ++i) s += p[i] * seq[i];
        sums.emplace_back(s, idx);
    }
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 1; i < sums.size(); ++i) {
        if (same_sum(sums[i].first, sums[i - 1].first, tol))
            return {false, QuasiWitness{decode3(sums[i - 1].second, len), decode3(sums[i].second, len)}};
    }
    return {true, std::nullopt};
}

// Two sign patterns collide iff some nonzero delta in {-2..2}^len has
// sum delta_i n_i = 0. Depth first over the largest elements, pruned by
// the suffix bound 2 * sum of what is left.
struct DeltaSearch {
    std::vector<double> v;       // sorted descending
    std::vector<double> suffix;  // 2 * sum v[i..]
    std::vector<int> delta;
    double tol;
    bool nonzero = false;

    bool run(std::size_t i, double partial, bool any) {
        if (i == v.size()) return any && std::fabs(partial) <= tol;
        if (std::fabs(partial) > suffix[i] + tol) return false;
        static const int order[5] = {0, 1, -1, 2, -2};
        for (int d : order) {
            delta[i] = d;
            if (run(i + 1, partial + d * v[i], any || d != 0)) return true;
        }
        delta[i] = 0;
        return false;
    }
};

}  // namespace

TrigPoly family(const FamilySpec& spec) { return std::visit(FamilyBuilder{}, spec); }

QuasiResult quasi_independent(const std::vector<double>& seq, std::size_t max_len) {
    if (seq.size() > max_len || seq.size() > 24)
        throw Error(ErrorKind::TooLong, "length " + std::to_string(seq.size()) + " exceeds cap");
    for (double x : seq)
        if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "entries must be positive");
    if (seq.empty()) return {true, std::nullopt};
    double scale = 0.0;
    for (double x : seq) scale += x;
    // rounding level of the largest possible sum; an absolute 1e-9*scale would
    // swallow the small end of wide sequences like 3^0..3^23
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    if (seq.size() <= 12) return brute_force(seq, tol);

    std::vector<std::size_t> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return seq[a] > seq[b]; });
    DeltaSearch s;
    s.tol = tol;
    for (auto i : idx) s.v.push_back(seq[i]);
    s.suffix.assign(s.v.size() + 1, 0.0);
    for (std::size_t i = s.v.size(); i-- > 0;) s.suffix[i] = s.suffix[i + 1] + 2.0 * s.v[i];
    s.delta.assign(s.v.size(), 0);
    if (!s.run(0, 0.0, false)) return {true, std::nullopt};
    // split delta = e1 - e2 with e1, e2 in {-1,0,1}
    QuasiWitness w{std::vector<int>(seq.size(), 0), std::vector<int>(seq.size(), 0)};
    for (std::size_t j = 0; j < idx.size(); ++j) {
        int d = s.delta[j];
        int a = d >= 1 ? 1 : (d == -2 ? -1 : 0);
        int b = a - d;
        w.first[idx[j]] = a;
        w.second[idx[j]] = b;
    }
    return {false, w};
}

}  // namespace triglab
