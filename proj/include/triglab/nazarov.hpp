#pragma once

#include "triglab/kernels.hpp"
#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace triglab {

// P moved to slots k + N_delta. The unit-gap tails on both sides carry zero
// coefficients and are never materialized.
struct ShiftedSystem {
    double delta = 0.5;
    std::int64_t N_delta = 1;
    int m_delta = 0;   // N_delta = 2^m_delta
    int n_delta = 0;   // N + N_delta <= 2^n_delta - 1
    std::vector<double> lambdas;       // materialized frequencies (those of P)
    std::vector<cplx> coeffs;
    std::vector<std::int64_t> slots;   // k + N_delta
    double S_delta = 0.0;              // sum |a_k| / (k + N_delta)
    double S = 0.0;                    // sum |a_k| / (k + 1)
};

inline constexpr std::int64_t default_N_delta_cap = std::int64_t(1) << 14;

ShiftedSystem extend_and_shift(const TrigPoly& P, double delta, std::int64_t N_cap = default_N_delta_cap);

// |sum_{k != l} z_k conj(z_l) / (lambda_k - lambda_l)| against pi sum |z_k|^2
std::pair<double, double> hilbert_check(const std::vector<double>& lams, const std::vector<cplx>& zs);

struct NazarovBlock {
    int j = 0;
    std::vector<std::size_t> members;  // indices into the system
    double l2 = 0.0;                   // ||f_j|| on I_delta, exact Gram
    double l2_bound = 0.0;             // 2^{-j/2} sqrt(|I_delta| + 1)
};

struct NazarovCertificate {
    SmoothingKernelParams params;
    ShiftedSystem system;
    double interval_length = 1.5;  // |I_delta| = 1 + delta
    int oversample = 8;
    std::size_t grid_size = 0;
    std::vector<NazarovBlock> blocks;
    double alpha_emp = 0.0;
    double eps = 0.0;
    double eps_cap = 0.0;          // sqrt(L)(sqrt2 - 1)/sqrt(2(L+1))
    bool eps_given = false;
    double grid_sup = 0.0;
    double pad = 0.0;
    double sup_Ttilde = 0.0;
    double max_partial_sup = 0.0;
    double closed_form_gap = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double certified_bound = 0.0;   // lower bound for the unnormalized L1 norm on I_delta
    double harmonic_bound = 0.0;    // certified_bound / N_delta
    double realized_constant = 0.0; // delta^{15/2} S / certified_bound, +inf when void
    // flags
    bool alpha_positive = false;
    bool e1_ok = false;
    bool e2_ok = false;
    bool damping_ok = false;
    bool blocks_ok = false;
    bool eps_ok = false;
    bool pass = false;
};

NazarovCertificate build_dual_nazarov(const TrigPoly& P, double delta, std::optional<double> eps = std::nullopt,
                                      int oversample = 8);

struct PairingCheck {
    double e1 = 0.0;   // time-domain recomputation
    double e2 = 0.0;
    bool recheck = false;
};

// trapezoid on a grid twice as fine, with phi_delta evaluated in the time domain
PairingCheck pairing(const NazarovCertificate& cert, const TrigPoly& P);

}  // namespace triglab
