#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace triglab {

using cplx = std::complex<double>;

struct GapInfo {
    double gamma = 0.0;  // min consecutive gap, +inf for a single frequency
    bool is_one_separated = true;
};

// P(t) = sum_k a_k exp(2 pi i lambda_k t), immutable once built
class TrigPoly {
public:
    TrigPoly(std::vector<double> freqs, std::vector<cplx> coeffs);

    const std::vector<double>& freqs() const { return freqs_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::size_t size() const { return freqs_.size(); }
    const GapInfo& gap() const { return gap_; }

    // every frequency within 1e-9 of an integer
    bool is_harmonic() const { return harmonic_; }
    std::vector<std::int64_t> int_freqs() const;  // throws NonIntegerFrequencies

    cplx eval(double t) const;
    double l1_coeffs() const;  // sum |a_k|
    double l2_coeffs() const;  // (sum |a_k|^2)^(1/2)

private:
    std::vector<double> freqs_;
    std::vector<cplx> coeffs_;
    GapInfo gap_;
    bool harmonic_ = false;
};

TrigPoly make(std::vector<double> freqs, std::vector<cplx> coeffs);

// merged support, coefficients added on shared frequencies
TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);

// frequencies moved by c, coefficients untouched
TrigPoly shift_freqs(const TrigPoly& p, double c);

// integer (freq, coeff) pairs in any order; repeated freqs are summed
TrigPoly from_int_terms(const std::vector<std::pair<std::int64_t, cplx>>& terms);

struct Dirichlet { int N = 0; };
struct Fejer { int L = 0; };
struct Newman { int N = 0; };
struct Lacunary {
    double q = 2.0;
    int K = 1;
    std::vector<cplx> coeffs;  // empty means all ones
    double scale = 1.0;        // lambda_k = scale * q^k
};
struct HansonSet {
    std::int64_t D = 0;
    std::int64_t d = 0;
    double delta = 0.0;  // declared delta, D > (2+delta) d is checked
    std::vector<std::int64_t> I;
    std::vector<std::vector<std::int64_t>> A;  // one subset per element of I, or a single shared one
};
struct InghamCounterexample {
    double alpha = 0.25;
    double r = 0.5;
    int m = 0;
};

using FamilySpec = std::variant<Dirichlet, Fejer, Newman, Lacunary, HansonSet, InghamCounterexample>;

TrigPoly family(const FamilySpec& spec);

// coefficient (-alpha)_n / n! r^n of the counterexample series
std::vector<double> counterexample_coeffs(double alpha, double r, int m);

struct QuasiWitness {
    std::vector<int> first;   // entries in {-1, 0, 1}
    std::vector<int> second;
};

struct QuasiResult {
    bool independent = true;
    std::optional<QuasiWitness> witness;
};

QuasiResult quasi_independent(const std::vector<double>& seq, std::size_t max_len = 24);

}  // namespace triglab
