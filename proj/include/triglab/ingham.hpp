#pragma once

#include "triglab/trigpoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace triglab {

// G_jk = sinc(pi T (lambda_j - lambda_k)), row major, real symmetric
struct GramMatrix {
    std::size_t n = 0;
    double T = 1.0;
    std::vector<double> freqs;
    std::vector<double> a;

    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

GramMatrix gram(const std::vector<double>& freqs, double T);

// a^* G a
double quadratic_form(const GramMatrix& G, const std::vector<cplx>& a);

// all eigenvalues by cyclic Jacobi, ascending; sweeps used is reported through *sweeps
std::vector<double> jacobi_eigenvalues(const GramMatrix& G, int* sweeps = nullptr);
std::pair<double, double> eigen_range(const GramMatrix& G);

enum class ConverseVariant { Statement, ProofVariant };

// lower constant at x = gamma T, 0 when x <= 1
double converse_constant(double x, ConverseVariant v = ConverseVariant::Statement);
std::pair<double, double> ingham_constants(double T, double gamma, ConverseVariant v = ConverseVariant::Statement);

struct FrameReport {
    double T = 1.0;
    double gamma = 1.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double theory_lower = 0.0;
    double theory_upper = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
};

// gamma defaults to the set's own minimal gap
FrameReport frame_report(const std::vector<double>& freqs, double T, std::optional<double> gamma = std::nullopt,
                         ConverseVariant v = ConverseVariant::Statement);

// closed form (pi^2/2^6) (3 d^4/2^13)^n (g_n T - 1) / prod_{j=0..n} (1 + 1/(g_j T)).
// gammas = (g_1..g_n); g_0 defaults to g_1.
double haraux_bound(double C, double B, double delta, const std::vector<double>& gammas, double T,
                    std::optional<double> gamma0 = std::nullopt);

// the iteration the closed form summarizes: kappa^n d^{4n} C_n / (B_1 .. B_n),
// C_n = (pi^2/2^6)(T g_n - 1), B_j = 6 (1 + 1/(g_j T))
double haraux_bound_iterated(double delta, const std::vector<double>& gammas, double T);

// one removal step: kappa (C/B) delta^4 with kappa = 8^-4
double haraux_step(double C, double B, double delta);

inline constexpr double haraux_kappa = 1.0 / 4096.0;

// int_{-1/2}^{1/2} |P_{m,r}|^2 / sum |a_{m,r}(k)|^2
double counterexample_ratio(double alpha, double r, int m);

}  // namespace triglab
