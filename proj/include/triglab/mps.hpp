#pragma once

#include "triglab/fft.hpp"
#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <vector>

namespace triglab {

// keep the mean and the Nyquist bin, double bins 1..G/2-1, drop the rest
fft::cvec analytic_completion(const std::vector<double>& samples);

struct MpsBlock {
    int j = 0;
    std::vector<std::size_t> indices;     // k with 2^j <= k+1 < 2^{j+1}
    std::vector<std::int64_t> freqs;      // n_k
    std::vector<cplx> coeffs;             // u_k/(k+1), placed at -n_k
    double grid_sup = 0.0;                // max |f_j| on the grid
};

struct MpsCertificate {
    double eta = 1.0 / 24.0;
    int m = 0;
    int oversample = 8;
    std::size_t grid_size = 0;
    double S = 0.0;
    std::vector<MpsBlock> blocks;
    double grid_sup = 0.0;
    double pad = 0.0;
    double sup_T1 = 0.0;
    double max_partial_sup = 0.0;   // max over j of grid sup |F_j|
    double closed_form_gap = 0.0;   // grid max |F_m - sum f_j g_{j,m}|
    double completion_gap = 0.0;    // grid max |Re h_j - |f_j||
    std::vector<double> deviations;
    std::vector<cplx> t1_at_minus_n;  // T1^(-n_k)
    double refined_bound = 0.0;       // (S - sum |a_k| dev_k)_+ / sup_T1
    double certified_bound = 0.0;
    bool sup_ok = false;
    bool deviations_ok = false;
    bool pass = false;
};

MpsCertificate build_dual(const TrigPoly& P, double eta = 1.0 / 24.0, int oversample = 8);

// grid samples of T1 for a finished construction (the recursion is rerun)
fft::cvec mps_t1_grid(const TrigPoly& P, double eta, int oversample);

struct MpsVerification {
    double l1_value = 0.0;
    double l1_error = 0.0;
    double max_deviation_gap = 0.0;   // stored vs 4x grid recomputation
    double doubled_bound = 0.0;       // certified bound at twice the oversampling
    double doubling_change = 0.0;
    bool doubling_stable = false;     // change <= 1e-4
};

// throws CertificateMismatch when the certificate does not reproduce from P
// or claims more than the norm allows
MpsVerification verify_certificate(const MpsCertificate& cert, const TrigPoly& P);

}  // namespace triglab
