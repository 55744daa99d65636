#pragma once

#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace triglab {

struct IntervalSpec {
    double center = 0.0;
    double T = 1.0;
    bool normalized = true;  // divide by T
};

enum class NormMethod { RiemannCertified, Quadrature, ExactGram, ExactAutocorrelation };
const char* method_name(NormMethod m);

struct CertifiedValue {
    double value = 0.0;
    double error_bound = 0.0;
    NormMethod method = NormMethod::RiemannCertified;
    std::size_t samples = 0;
};

inline constexpr std::size_t default_sample_cap = std::size_t(1) << 26;

// ((1/T) int_{-T/2}^{T/2} |P|^2)^(1/2), exact through the sinc Gram identity
double l2_normalized(const TrigPoly& P, double T);
CertifiedValue l2_exact(const TrigPoly& P, const IntervalSpec& I);

CertifiedValue l1_certified(const TrigPoly& P, const IntervalSpec& I, double rel_tol,
                            std::size_t cap = default_sample_cap);

// plain midpoint rule; the error estimate is the change from n/2 to n samples
CertifiedValue lp_quadrature(const TrigPoly& P, const IntervalSpec& I, double p, std::size_t n);

// c_l = sum_k a_{l+k} conj(a_k), sorted by l
std::vector<std::pair<std::int64_t, cplx>> autocorrelation(const TrigPoly& P);
double l4_via_autocorrelation(const TrigPoly& P);

struct CommonDenominator {
    std::int64_t M = 1;
    std::vector<std::int64_t> numerators;
    double max_err = 0.0;  // max_j |lambda_j M - N_j|
};

std::optional<CommonDenominator> common_denominator(const std::vector<double>& freqs, double eps,
                                                    std::int64_t M_max);

enum class BesicovitchStrategy { TSweep, DirichletApprox };

struct BesicovitchParams {
    double T0 = 4.0;
    int K = 6;
    double rel_tol = 1e-3;
    bool certified = true;       // TSweep: certified L1, or quadrature when false
    double p = 1.0;              // only used by the quadrature sweep
    double density = 8.0;        // quadrature samples per period of the top centered frequency
    std::size_t quad_cap = std::size_t(1) << 24;
    double eps = 0.01;
    std::int64_t M_max = 100000;
};

struct BesicovitchSample {
    double T = 0.0;
    double norm = 0.0;
    double error_bound = 0.0;
    std::int64_t M = 0;
    double eps = 0.0;
    double slack = 0.0;
};

struct BesicovitchReport {
    BesicovitchStrategy strategy = BesicovitchStrategy::TSweep;
    std::vector<BesicovitchSample> samples;
    double trend_estimate = 0.0;
};

BesicovitchReport besicovitch_estimate(const TrigPoly& P, BesicovitchStrategy strategy,
                                       const BesicovitchParams& params = {});

}  // namespace triglab
