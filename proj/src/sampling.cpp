#include "triglab/sampling.hpp"
#include "triglab/error.hpp"
#include "triglab/fft.hpp"
#include "triglab/numeric.hpp"
#include "triglab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace triglab::sampling {

namespace {

constexpr std::size_t chunk_len = 1024;

inline double powabs(double m2, double p) {
    if (p == 2.0) return m2;
    if (p == 1.0) return std::sqrt(m2);
    if (p == 4.0) return m2 * m2;
    return std::pow(m2, 0.5 * p);
}

}  // namespace

double abs_pow_mean(const TrigPoly& P, double a, double h, std::size_t n, double p, double offset) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero samples");
    const auto& f = P.freqs();
    const auto& c = P.coeffs();
    const std::size_t K = f.size();
    // center frequencies: |P| is unchanged and the phases stay small
    const double mid = 0.5 * (f.front() + f.back());
    std::vector<double> lam(K), wr(K), wi(K);
    for (std::size_t k = 0; k < K; ++k) {
        lam[k] = f[k] - mid;
        wr[k] = cos_pi(2.0 * lam[k] * h);
        wi[k] = sin_pi(2.0 * lam[k] * h);
    }
    double total = par::chunked_sum(n, chunk_len, [&](std::size_t b, std::size_t e) {
        std::vector<double> zr(K), zi(K);
        const double t0 = a + (static_cast<double>(b) + offset) * h;
        for (std::size_t k = 0; k < K; ++k) {
            const double x = 2.0 * lam[k] * t0;
            const double cr = cos_pi(x), ci = sin_pi(x);
            zr[k] = c[k].real() * cr - c[k].imag() * ci;
            zi[k] = c[k].real() * ci + c[k].imag() * cr;
        }
        double acc = 0.0;
        for (std::size_t j = b; j < e; ++j) {
            double sr = 0.0, si = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                sr += zr[k];
                si += zi[k];
                const double nr = zr[k] * wr[k] - zi[k] * wi[k];
                zi[k] = zr[k] * wi[k] + zi[k] * wr[k];
                zr[k] = nr;
            }
            acc += powabs(sr * sr + si * si, p);
        }
        return acc;
    });
    return total / static_cast<double>(n);
}

double abs_pow_mean_serial(const TrigPoly& P, double a, double h, std::size_t n, double p, double offset) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero samples");
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += powabs(std::norm(P.eval(a + (static_cast<double>(j) + offset) * h)), p);
    return acc / static_cast<double>(n);
}

std::size_t harmonic_block(const TrigPoly& P) {
    auto n = P.int_freqs();
    const auto span = static_cast<std::size_t>(n.back() - n.front());
    return std::max<std::size_t>(8, next_pow2(span + 1));
}

double harmonic_abs_pow_mean(const TrigPoly& P, std::size_t n, double p) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero samples");
    auto nf = P.int_freqs();
    const auto& c = P.coeffs();
    const std::int64_t base = nf.front();
    const std::size_t M = harmonic_block(P);
    const std::int64_t N = static_cast<std::int64_t>(n);

    if (n % M == 0) {
        const std::size_t L = n / M;
        double total = par::chunked_sum(L, 1, [&](std::size_t q0, std::size_t q1) {
            fft::cvec buf(M);
            double acc = 0.0;
            for (std::size_t q = q0; q < q1; ++q) {
                std::fill(buf.begin(), buf.end(), cplx(0.0, 0.0));
                for (std::size_t k = 0; k < nf.size(); ++k) {
                    const std::int64_t b = nf[k] - base;
                    // twist exp(2 pi i b q / n), exponent reduced mod n
                    const double x = 2.0 * static_cast<double>((b * static_cast<std::int64_t>(q)) % N) / static_cast<double>(N);
                    buf[static_cast<std::size_t>(b)] += c[k] * cplx(cos_pi(x), sin_pi(x));
                }
                fft::inverse(buf);
                for (auto& z : buf) acc += powabs(std::norm(z), p);
            }
            return acc;
        });
        return total / static_cast<double>(n);
    }
    if (n <= (std::size_t(1) << 22)) {
        fft::cvec buf(n, cplx(0.0, 0.0));
        for (std::size_t k = 0; k < nf.size(); ++k) {
            std::int64_t b = (nf[k] - base) % N;
            buf[static_cast<std::size_t>(b)] += c[k];
        }
        fft::inverse(buf);
        double acc = par::chunked_sum(n, 4096, [&](std::size_t b, std::size_t e) {
            double s = 0.0;
            for (std::size_t j = b; j < e; ++j) s += powabs(std::norm(buf[j]), p);
            return s;
        });
        return acc / static_cast<double>(n);
    }
    return abs_pow_mean(P, 0.0, 1.0 / static_cast<double>(n), n, p, 0.0);
}

double harmonic_abs_pow_mean_serial(const TrigPoly& P, std::size_t n, double p) {
    (void)P.int_freqs();
    return abs_pow_mean_serial(P, 0.0, 1.0 / static_cast<double>(n), n, p, 0.0);
}

}  // namespace triglab::sampling
