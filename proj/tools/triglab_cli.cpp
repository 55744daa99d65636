// triglab command line: one subcommand per experiment, CSV or JSON out.
// exit 0 ok, 1 usage or input error, 2 a checked inequality or certificate failed

#include "triglab/error.hpp"
#include "triglab/hanson.hpp"
#include "triglab/ingham.hpp"
#include "triglab/io.hpp"
#include "triglab/mps.hpp"
#include "triglab/nazarov.hpp"
#include "triglab/norms.hpp"
#include "triglab/numeric.hpp"
#include "triglab/parallel.hpp"
#include "triglab/stochastics.hpp"
#include "triglab/trigpoly.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace triglab;
using io::json;

namespace {

struct Common {
    std::string input;
    std::string poly;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
};

struct Failed {};  // a mathematical check came out false

TrigPoly load(const Common& c) {
    if (!c.poly.empty()) {
        json j;
        try {
            j = json::parse(c.poly);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::InvalidArgument, std::string("--poly: ") + e.what());
        }
        return io::poly_from_json(j);
    }
    if (!c.input.empty()) return io::read_poly(c.input);
    throw Error(ErrorKind::InvalidArgument, "need --input or --poly");
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) std::cout << text;
    else io::write_text(c.output, text);
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

void add_common(CLI::App* sub, Common& c, bool needs_poly) {
    if (needs_poly) {
        sub->add_option("--input,-i", c.input, "polynomial JSON file");
        sub->add_option("--poly", c.poly, "inline polynomial JSON");
    }
    sub->add_option("--output,-o", c.output, "output file, stdout when omitted");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", c.seed, "seed for randomized inputs");
}

std::vector<double> random_separated(std::size_t n, double gamma, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> f;
    double x = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        f.push_back(x);
        x += gamma * (1.0 + u(rng));
    }
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    par::apply_thread_env();
    CLI::App app{"triglab: trigonometric inequality lab"};
    app.require_subcommand(1);

    // norm
    Common c_norm;
    double norm_p = 1.0, norm_T = 1.0, norm_center = 0.0, norm_tol = 1e-6;
    std::size_t norm_samples = std::size_t(1) << 20;
    bool norm_raw = false;
    auto* s_norm = app.add_subcommand("norm", "L^p norm on an interval");
    add_common(s_norm, c_norm, true);
    s_norm->add_option("--p", norm_p, "exponent");
    s_norm->add_option("--T", norm_T, "interval length");
    s_norm->add_option("--center", norm_center, "interval center");
    s_norm->add_option("--tol", norm_tol, "relative tolerance for the certified L1 path");
    s_norm->add_option("--samples", norm_samples, "quadrature samples for p other than 1 and 2");
    s_norm->add_flag("--unnormalized", norm_raw, "integral instead of the mean");

    // ingham
    Common c_ing;
    std::vector<double> ing_T{1.1, 1.5, 2.0, 4.0};
    std::size_t ing_n = 20;
    std::string ing_variant = "statement";
    auto* s_ing = app.add_subcommand("ingham", "Gram eigenvalues against the Ingham constants");
    add_common(s_ing, c_ing, true);
    s_ing->add_option("--T", ing_T, "one or more interval lengths")->delimiter(',');
    s_ing->add_option("--n", ing_n, "size of the random 1-separated set when no polynomial is given");
    s_ing->add_option("--variant", ing_variant, "statement or proof")->check(CLI::IsMember({"statement", "proof"}));

    // mps-certify
    Common c_mps;
    double mps_eta = 1.0 / 24.0;
    int mps_os = 8;
    auto* s_mps = app.add_subcommand("mps-certify", "dual function certificate for an integer-frequency polynomial");
    add_common(s_mps, c_mps, true);
    s_mps->add_option("--eta", mps_eta, "damping parameter");
    s_mps->add_option("--oversample", mps_os, "grid oversampling");

    // nazarov-certify
    Common c_naz;
    double naz_delta = 0.5;
    std::optional<double> naz_eps;
    int naz_os = 8;
    auto* s_naz = app.add_subcommand("nazarov-certify", "small interval certificate for a unit-gap polynomial");
    add_common(s_naz, c_naz, true);
    s_naz->add_option("--delta", naz_delta, "interval is [-(1+delta)/2, (1+delta)/2]");
    s_naz->add_option("--eps", naz_eps, "damping parameter, chosen by bisection when omitted");
    s_naz->add_option("--oversample", naz_os, "grid oversampling");

    // hanson-demo
    Common c_han;
    c_han.format = "csv";
    std::vector<std::int64_t> han_m{4, 8, 16}, han_n{4, 8, 16};
    auto* s_han = app.add_subcommand("hanson-demo", "L1 norms of strongly 2-dimensional sets");
    add_common(s_han, c_han, false);
    s_han->add_option("--m", han_m, "values of |I|")->delimiter(',');
    s_han->add_option("--n", han_n, "values of |A_k|")->delimiter(',');

    // lebesgue-table
    Common c_leb;
    c_leb.format = "csv";
    std::vector<int> leb_n{10, 100, 1000};
    double leb_tol = 1e-3;
    auto* s_leb = app.add_subcommand("lebesgue-table", "L1 norm of the Dirichlet kernel against (4/pi^2) ln N");
    add_common(s_leb, c_leb, false);
    s_leb->add_option("--n", leb_n, "degrees")->delimiter(',');
    s_leb->add_option("--tol", leb_tol, "relative tolerance");

    // newman-table
    Common c_new;
    c_new.format = "csv";
    std::vector<int> new_n{100, 400, 1600};
    double new_tol = 1e-3;
    auto* s_new = app.add_subcommand("newman-table", "L1 and L4 norms of the Gauss-sum polynomials");
    add_common(s_new, c_new, false);
    s_new->add_option("--n", new_n, "degrees")->delimiter(',');
    s_new->add_option("--tol", new_tol, "relative tolerance");

    // lacunary-table
    Common c_lac;
    c_lac.format = "csv";
    std::vector<int> lac_K{4, 5, 6, 7, 8, 9, 10, 11, 12};
    double lac_q = 3.0, lac_p = 1.0, lac_scale = 1.0;
    std::string lac_mode = "periodic";
    auto* s_lac = app.add_subcommand("lacunary-table", "norm ratios of lacunary sums");
    add_common(s_lac, c_lac, false);
    s_lac->add_option("--K", lac_K, "numbers of terms")->delimiter(',');
    s_lac->add_option("--q", lac_q, "ratio");
    s_lac->add_option("--p", lac_p, "exponent");
    s_lac->add_option("--scale", lac_scale, "frequencies scale * q^k");
    s_lac->add_option("--mode", lac_mode, "periodic or besicovitch")->check(CLI::IsMember({"periodic", "besicovitch"}));

    // besicovitch
    Common c_bes;
    c_bes.format = "csv";
    BesicovitchParams bes;
    std::string bes_strategy = "tsweep";
    bool bes_quad = false;
    auto* s_bes = app.add_subcommand("besicovitch", "large-T mean of |P|");
    add_common(s_bes, c_bes, true);
    s_bes->add_option("--strategy", bes_strategy, "tsweep or dirichlet")->check(CLI::IsMember({"tsweep", "dirichlet"}));
    s_bes->add_option("--T0", bes.T0, "first window");
    s_bes->add_option("--steps", bes.K, "doublings of the window");
    s_bes->add_option("--tol", bes.rel_tol, "relative tolerance");
    s_bes->add_option("--eps", bes.eps, "Dirichlet approximation accuracy");
    s_bes->add_option("--M-max", bes.M_max, "largest common denominator tried");
    s_bes->add_option("--p", bes.p, "exponent for the quadrature sweep");
    s_bes->add_flag("--quadrature", bes_quad, "plain quadrature instead of the certified sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*s_norm) {
            const TrigPoly P = load(c_norm);
            const IntervalSpec I{norm_center, norm_T, !norm_raw};
            CertifiedValue v;
            if (norm_p == 1.0) v = l1_certified(P, I, norm_tol);
            else if (norm_p == 2.0) v = l2_exact(P, I);
            else v = lp_quadrature(P, I, norm_p, norm_samples);
            if (c_norm.format == "json") emit_json(c_norm, io::to_json(v));
            else emit(c_norm, io::Csv{{"p", "value", "error_bound", "method"}, {{io::fmt(norm_p), io::fmt(v.value), io::fmt(v.error_bound), method_name(v.method)}}}.str());
        } else if (*s_ing) {
            std::vector<double> freqs;
            if (!c_ing.input.empty() || !c_ing.poly.empty()) freqs = load(c_ing).freqs();
            else {
                std::mt19937_64 rng(c_ing.seed);
                freqs = random_separated(ing_n, 1.0, rng);
            }
            const auto v = ing_variant == "proof" ? ConverseVariant::ProofVariant : ConverseVariant::Statement;
            io::Csv csv{{"T", "gamma", "lambda_min", "lambda_max", "theory_lower", "theory_upper", "lower_ok", "upper_ok"}, {}};
            json arr = json::array();
            bool ok = true;
            for (double T : ing_T) {
                auto r = frame_report(freqs, T, std::nullopt, v);
                ok = ok && r.lower_ok && r.upper_ok;
                arr.push_back(io::to_json(r));
                csv.rows.push_back({io::fmt(r.T), io::fmt(r.gamma), io::fmt(r.lambda_min), io::fmt(r.lambda_max), io::fmt(r.theory_lower),
                                    io::fmt(r.theory_upper), r.lower_ok ? "1" : "0", r.upper_ok ? "1" : "0"});
            }
            if (c_ing.format == "json") emit_json(c_ing, arr);
            else emit(c_ing, csv.str());
            if (!ok) throw Failed{};
        } else if (*s_mps) {
            const TrigPoly P = load(c_mps);
            const auto cert = build_dual(P, mps_eta, mps_os);
            json j = io::to_json(cert);
            bool ok = cert.pass;
            try {
                const auto v = verify_certificate(cert, P);
                j["verification"] = {{"l1_value", v.l1_value}, {"l1_error", v.l1_error}, {"max_deviation_gap", v.max_deviation_gap},
                                     {"doubled_bound", v.doubled_bound}, {"doubling_change", v.doubling_change},
                                     {"doubling_stable", v.doubling_stable}, {"ok", true}};
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::CertificateMismatch) throw;
                j["verification"] = {{"ok", false}, {"message", e.what()}};
                ok = false;
            }
            emit_json(c_mps, j);
            if (!ok) throw Failed{};
        } else if (*s_naz) {
            const TrigPoly P = load(c_naz);
            const auto cert = build_dual_nazarov(P, naz_delta, naz_eps, naz_os);
            const auto pc = pairing(cert, P);
            const auto l1 = l1_certified(P, IntervalSpec{0.0, 1.0 + naz_delta, false}, 1e-4);
            json j = io::to_json(cert);
            j["pairing"] = {{"e1", pc.e1}, {"e2", pc.e2}, {"recheck", pc.recheck}};
            j["l1"] = io::to_json(l1);
            const bool sound = cert.certified_bound <= l1.value + l1.error_bound;
            j["sound"] = sound;
            emit_json(c_naz, j);
            if (!cert.pass || !pc.recheck || !sound) throw Failed{};
        } else if (*s_han) {
            io::Csv csv{{"m", "n", "l1_norm", "theorem_bound", "split_q", "split_s"}, {}};
            json arr = json::array();
            bool ok = true;
            for (auto m : han_m)
                for (auto n : han_n) {
                    const auto r = hanson_demo(demo_set(m, n));
                    ok = ok && r.inequality_holds && (!r.class_sum || r.class_sum->holds);
                    arr.push_back(io::to_json(r));
                    csv.rows.push_back({io::fmt(r.m), io::fmt(r.n), io::fmt(r.l1_norm), io::fmt(r.theorem_bound),
                                        io::fmt(r.split ? r.split->q : std::int64_t(0)), io::fmt(r.split ? r.split->s : std::int64_t(0))});
                }
            if (c_han.format == "json") emit_json(c_han, arr);
            else emit(c_han, csv.str());
            if (!ok) throw Failed{};
        } else if (*s_leb) {
            io::Csv csv{{"N", "l1", "log_term", "diff"}, {}};
            json arr = json::array();
            for (int N : leb_n) {
                const auto v = l1_certified(family(Dirichlet{N}), IntervalSpec{0.0, 1.0, true}, leb_tol);
                const double lt = 4.0 / (pi * pi) * std::log(static_cast<double>(N));
                csv.rows.push_back({io::fmt(std::int64_t(N)), io::fmt(v.value), io::fmt(lt), io::fmt(v.value - lt)});
                arr.push_back({{"N", N}, {"l1", io::to_json(v)}, {"log_term", lt}, {"diff", v.value - lt}});
            }
            if (c_leb.format == "json") emit_json(c_leb, arr);
            else emit(c_leb, csv.str());
        } else if (*s_new) {
            io::Csv csv{{"N", "l1", "sqrt_N", "l4_fourth", "N_squared", "dev_over_N_3_2"}, {}};
            json arr = json::array();
            for (int N : new_n) {
                const TrigPoly P = family(Newman{N});
                const auto v = l1_certified(P, IntervalSpec{0.0, 1.0, true}, new_tol);
                const double l4 = l4_via_autocorrelation(P), q = std::pow(l4, 4.0);
                const double n = static_cast<double>(N), n2 = n * n;
                csv.rows.push_back({io::fmt(std::int64_t(N)), io::fmt(v.value), io::fmt(std::sqrt(n)), io::fmt(q), io::fmt(n2),
                                    io::fmt((q - n2) / std::pow(n, 1.5))});
                arr.push_back({{"N", N}, {"l1", io::to_json(v)}, {"l4_fourth", q}});
            }
            if (c_new.format == "json") emit_json(c_new, arr);
            else emit(c_new, csv.str());
        } else if (*s_lac) {
            io::Csv csv{{"q", "p", "K", "ratio"}, {}};
            json arr = json::array();
            const auto mode = lac_mode == "periodic" ? LacunaryMode::Periodic : LacunaryMode::Besicovitch;
            bool ok = true;
            for (int K : lac_K) {
                const TrigPoly P = family(Lacunary{lac_q, K, {}, lac_scale});
                const auto r = lacunary_check(P, lac_p, mode);
                ok = ok && r.within;
                csv.rows.push_back({io::fmt(r.q), io::fmt(r.p), io::fmt(static_cast<std::int64_t>(r.K)), io::fmt(r.ratio)});
                arr.push_back(io::to_json(r));
            }
            if (c_lac.format == "json") emit_json(c_lac, arr);
            else emit(c_lac, csv.str());
            if (!ok) throw Failed{};
        } else if (*s_bes) {
            const TrigPoly P = load(c_bes);
            bes.certified = !bes_quad;
            const auto st = bes_strategy == "tsweep" ? BesicovitchStrategy::TSweep : BesicovitchStrategy::DirichletApprox;
            const auto rep = besicovitch_estimate(P, st, bes);
            io::Csv csv{{"T", "norm", "error_bound", "M", "eps", "slack"}, {}};
            json arr = json::array();
            for (auto& s : rep.samples) {
                csv.rows.push_back({io::fmt(s.T), io::fmt(s.norm), io::fmt(s.error_bound), io::fmt(s.M), io::fmt(s.eps), io::fmt(s.slack)});
                arr.push_back({{"T", s.T}, {"norm", s.norm}, {"error_bound", s.error_bound}, {"M", s.M}, {"eps", s.eps}, {"slack", s.slack}});
            }
            if (c_bes.format == "json") emit_json(c_bes, {{"samples", arr}, {"trend_estimate", rep.trend_estimate}});
            else emit(c_bes, csv.str());
        }
    } catch (const Failed&) {
        std::cerr << "check failed\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
