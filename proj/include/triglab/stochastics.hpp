#pragma once

#include "triglab/norms.hpp"
#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace triglab {

// (-1)^floor(x 2^{k+1}), right-continuous at the dyadic points
int rademacher(int k, double x);

// int_0^1 r_k r_l by counting dyadic cells of generation max(k, l) + 1
std::int64_t rademacher_inner(int k, int l);

struct RademacherSeries {
    std::vector<cplx> coeffs;
    double l2 = 0.0;
    bool real = true;
};

RademacherSeries rademacher_series(std::vector<cplx> coeffs);

inline constexpr std::size_t max_enumerated_terms = 20;

// (int_0^1 |sum c_k r_k|^p)^{1/p} exactly, as an average over the 2^len sign patterns
double rademacher_norm(const RademacherSeries& f, double p);

struct KhintchineCheck {
    double norm2m = 0.0;
    double bound = 0.0;   // sqrt(m) l2 for real coefficients, 2 sqrt(m) l2 otherwise
    bool holds = false;
};

KhintchineCheck khintchine_check(const std::vector<cplx>& coeffs, int m);

// B_4 of the real or complex case, and A_p = B_4^{(2p-4)/p} for p < 2
double khintchine_B4(bool real);
double khintchine_A(double p, bool real);

struct KhintchineLower {
    double norm = 0.0;
    double bound = 0.0;  // A_p l2
    bool holds = false;
};

KhintchineLower khintchine_lower(const std::vector<cplx>& coeffs, double p);

struct RieszProduct {
    std::vector<std::int64_t> n;
    std::vector<int> signs;
    std::map<std::int64_t, double> coeffs;
    std::size_t collisions = 0;  // indices reached by more than one choice of factors
};

// prod_{j <= depth} (1 + sign_j cos(2 pi n_j t)) expanded exactly
RieszProduct riesz_coeffs(const std::vector<std::int64_t>& n_seq, const std::vector<int>& signs, std::size_t depth);

enum class LacunaryMode { Periodic, Besicovitch };

struct LacunaryOptions {
    double lower_floor = 0.5;     // empirical, not a theorem constant
    double upper_ceiling = 1.0;   // Holder gives ratio <= 1 for p <= 2
    double rel_tol = 1e-2;        // periodic L1; 3^11-size frequencies need this to stay under the sample cap
    std::size_t quad_samples = std::size_t(1) << 22;  // periodic p not in {1, 2}
    // single window T = 32, 8 samples per period of the top centered frequency
    BesicovitchParams besicovitch{32.0, 0, 1e-3, false, 1.0, 8.0, std::size_t(1) << 26, 0.01, 100000};
};

struct LacunaryReport {
    double q = 0.0;       // min ratio of consecutive frequencies
    double p = 1.0;
    std::size_t K = 0;
    double norm = 0.0;
    double error_bound = 0.0;
    double l2 = 0.0;
    double ratio = 0.0;
    double lower_floor = 0.0;
    double upper_ceiling = 0.0;
    bool within = false;
};

LacunaryReport lacunary_check(const TrigPoly& P, double p, LacunaryMode mode, const LacunaryOptions& opt = {});

}  // namespace triglab
