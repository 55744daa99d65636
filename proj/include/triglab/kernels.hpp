#pragma once

#include "triglab/trigpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace triglab {

enum class InghamFn { h, h_hat, g, g_hat, GT, GT_hat };

// h = cos(pi x) on |x| <= 1/2, g = h*h, G_T = pi^2 T^2 h*h + h'*h'
double ingham_eval(InghamFn which, std::optional<double> T, double x);

struct SmoothingKernelParams {
    double delta = 0.5;
    int p = 10;
    int q = 8;
    double gamma_delta = 0.0;
    double D_delta = 0.0;
    double sup_bound = 0.0;
};

SmoothingKernelParams smoothing_params(double delta);

// closed form transform of phi_delta = (pi/2) h * g_delta, g_delta the (p+q)-fold box convolution
double phi_delta_hat(const SmoothingKernelParams& k, double lambda);

// time domain phi_delta by Gauss-Legendre convolution over the spline pieces of g_delta.
// Only used for independent rechecks of transform-side computations.
double phi_delta(const SmoothingKernelParams& k, double t);

// g_delta itself, the (p+q)-fold self convolution of the normalized box of width delta/(p+q)
double box_spline(const SmoothingKernelParams& k, double s);

// sinc(pi delta/(p+q)) must stay above sup_{|x|>=pi} |sinc x| for the |lambda| >= 1
// decay bound to follow from the sinc factor
bool decay_bound_applicable(const SmoothingKernelParams& k);

struct DiscreteKernel {
    std::int64_t lo = 0;
    std::vector<double> values;
    bool outside_lemma_range = false;  // hanson_kernel called with M, N outside 2 <= M < N

    std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
    double at(std::int64_t k) const;
    // sum_k K(k) exp(-2 pi i k t)
    cplx transform(double t) const;
};

DiscreteKernel dirichlet_kernel(int L);
DiscreteKernel fejer_kernel(int L);
DiscreteKernel hanson_kernel(int M, int N);

// closed forms of the transforms
double dirichlet_closed(int L, double t);
double fejer_closed(int L, double t);
double hanson_transform_closed(int M, int N, double t);

// the transform as a polynomial: t -> sum_k K(k) e^{-2 pi i k t}
TrigPoly kernel_poly(const DiscreteKernel& K);

}  // namespace triglab
