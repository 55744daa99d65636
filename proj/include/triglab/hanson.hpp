#pragma once

#include "triglab/kernels.hpp"
#include "triglab/norms.hpp"
#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triglab {

inline constexpr double C_MPS = 1.0 / 96.0;

struct CongruenceSplit {
    std::int64_t q = 1;   // 4^j
    std::int64_t s = 0;   // smallest residue among maximizers
    std::vector<std::int64_t> class_members;
    double lower = 0.0;   // |I|^{1/3} / 8
    double upper = 0.0;   // sqrt(q)
    bool bounds_ok = false;
};

CongruenceSplit congruence_split(std::vector<std::int64_t> I);

struct RiemannL1 {
    double sum = 0.0;    // (1/N) sum_j |P(j/N)|
    double bound = 0.0;  // relative envelope 2 pi d / N
};

RiemannL1 riemann_l1(const TrigPoly& P, std::size_t N);

// coefficient a_m times K^(p)(m), K^(p) the (R+S)-periodic extension of K on [-R, S-1]
TrigPoly periodize(const DiscreteKernel& K, const TrigPoly& P, std::int64_t R, std::int64_t S);

struct FilterCheck {
    TrigPoly filtered;
    CertifiedValue lhs;        // ||filtered||_1
    CertifiedValue base;       // ||P||_1
    double factor = 0.0;       // (1/(R+S)) sum_l |F_d[K0](l/(R+S))|
    double rhs = 0.0;          // factor * base
    bool holds = false;        // lhs <= rhs up to the quadrature error bars
};

FilterCheck periodize_filter(const DiscreteKernel& K, const TrigPoly& P, std::int64_t R, std::int64_t S);

// F(t) = sum_{k in I} f_k(t) exp(2 pi i D k t), deg f_k <= d
struct StructuredPoly {
    std::int64_t D = 0;
    std::int64_t d = 0;
    std::vector<std::int64_t> I;
    std::vector<std::vector<cplx>> f;  // per k, coefficients of n = -d..d
};

TrigPoly structured_poly(const StructuredPoly& F);
TrigPoly structured_row(const StructuredPoly& F, std::size_t i);  // f_k alone
StructuredPoly structured_from_set(const HansonSet& set);

struct ExtractionCheck {
    std::int64_t q = 0, s = 0;
    double lhs = 0.0;          // ||sum_{k in I(q;s)} f_k e(Dkt)||_1
    double full = 0.0;         // ||F||_1
    double constant = 0.0;     // 32 pi (2 + ln(1 + 2/delta))
    double rhs = 0.0;
    double filter_gap = 0.0;   // max coefficient difference, direct extraction vs periodized kernel
    bool holds = false;
};

// needs (2+2 delta) d + 4 <= D and q >= 4 pi
ExtractionCheck extraction_check(const StructuredPoly& F, double delta, std::int64_t q, std::int64_t s);

struct ClassSumSides {
    std::int64_t q = 0, s = 0;
    double lhs = 0.0;  // ||F||_1
    double rhs = 0.0;  // sum_j ||f_{k_j}||_1 (C/(2j) - 2 pi d/(qD)) / (32 pi (2 + ln(1 + 2/delta)))
    bool applicable = false;  // q > 4 pi
    bool holds = false;
};

// members of I(q;s) are taken in increasing order for the index j
ClassSumSides class_sum_sides(const StructuredPoly& F, double delta, std::int64_t q, std::int64_t s);

struct HansonReport {
    std::int64_t m = 0, n = 0;
    double l1_norm = 0.0;
    double l1_error = 0.0;
    double theorem_bound = 0.0;
    std::vector<double> row_norms;
    std::optional<CongruenceSplit> split;
    std::optional<ClassSumSides> class_sum;
    double threshold_n_cube = 0.0;     // pi^3 2^21 C^3 ln(n)^3
    double threshold_m_cube = 0.0;     // times ln(m)^3
    double threshold_n_inv_cube = 0.0; // the same with C^{-3}
    double threshold_m_inv_cube = 0.0;
    bool hypothesis_cube = false;
    bool hypothesis_inv_cube = false;
    bool inequality_holds = false;
    std::string note;
};

HansonReport hanson_demo(const HansonSet& set);

// I = {0..m-1}, A_k = {0..n-1}, d = n, D = 3d + 1, delta = 1
HansonSet demo_set(std::int64_t m, std::int64_t n);

}  // namespace triglab
