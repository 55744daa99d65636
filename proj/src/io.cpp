#include "triglab/io.hpp"
#include "triglab/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace triglab::io {

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const TrigPoly& P) {
    json c = json::array();
    for (auto& a : P.coeffs()) c.push_back({a.real(), a.imag()});
    return {{"freqs", P.freqs()}, {"coeffs", c}};
}

TrigPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("freqs") || !j.contains("coeffs") || !j["freqs"].is_array() || !j["coeffs"].is_array())
        throw Error(ErrorKind::InvalidArgument, "polynomial JSON needs arrays \"freqs\" and \"coeffs\"");
    std::vector<double> f;
    std::vector<cplx> a;
    try {
        for (auto& x : j["freqs"]) f.push_back(x.get<double>());
        for (auto& c : j["coeffs"]) {
            if (c.is_number()) a.emplace_back(c.get<double>(), 0.0);
            else if (c.is_array() && c.size() == 2) a.emplace_back(c[0].get<double>(), c[1].get<double>());
            else throw Error(ErrorKind::InvalidArgument, "coefficient must be a number or [re, im]");
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("bad polynomial JSON: ") + e.what());
    }
    return TrigPoly(std::move(f), std::move(a));
}

TrigPoly read_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
    }
    return poly_from_json(j);
}

json to_json(const CertifiedValue& v) {
    return {{"value", v.value}, {"error_bound", v.error_bound}, {"method", method_name(v.method)}, {"samples", v.samples}};
}

json to_json(const FrameReport& r) {
    return {{"T", r.T},
            {"gamma", r.gamma},
            {"lambda_min", r.lambda_min},
            {"lambda_max", r.lambda_max},
            {"theory_lower", r.theory_lower},
            {"theory_upper", r.theory_upper},
            {"lower_ok", r.lower_ok},
            {"upper_ok", r.upper_ok}};
}

json to_json(const DiscreteKernel& K) { return {{"lo", K.lo}, {"values", K.values}}; }

json to_json(const MpsCertificate& c) {
    json blocks = json::array();
    for (auto& b : c.blocks) {
        json co = json::array();
        for (auto& z : b.coeffs) co.push_back({z.real(), z.imag()});
        blocks.push_back({{"j", b.j}, {"freqs", b.freqs}, {"coeffs", co}, {"grid_sup", b.grid_sup}});
    }
    return {{"eta", c.eta},
            {"m", c.m},
            {"oversample", c.oversample},
            {"grid_size", c.grid_size},
            {"S", c.S},
            {"grid_sup", c.grid_sup},
            {"pad", c.pad},
            {"sup_T1", c.sup_T1},
            {"max_partial_sup", c.max_partial_sup},
            {"closed_form_gap", c.closed_form_gap},
            {"deviations", c.deviations},
            {"refined_bound", c.refined_bound},
            {"certified_bound", c.certified_bound},
            {"sup_ok", c.sup_ok},
            {"deviations_ok", c.deviations_ok},
            {"pass", c.pass},
            {"blocks", blocks}};
}

json to_json(const NazarovCertificate& c) {
    json blocks = json::array();
    for (auto& b : c.blocks) blocks.push_back({{"j", b.j}, {"size", b.members.size()}, {"l2", b.l2}, {"l2_bound", b.l2_bound}});
    return {{"delta", c.system.delta},
            {"N_delta", c.system.N_delta},
            {"m_delta", c.system.m_delta},
            {"n_delta", c.system.n_delta},
            {"S", c.system.S},
            {"S_delta", c.system.S_delta},
            {"grid_size", c.grid_size},
            {"oversample", c.oversample},
            {"alpha_emp", c.alpha_emp},
            {"eps", c.eps},
            {"eps_cap", c.eps_cap},
            {"grid_sup", c.grid_sup},
            {"pad", c.pad},
            {"sup_Ttilde", c.sup_Ttilde},
            {"e1", c.e1},
            {"e2", c.e2},
            {"certified_bound", c.certified_bound},
            {"harmonic_bound", c.harmonic_bound},
            {"realized_constant", finite_or_null(c.realized_constant)},
            {"alpha_positive", c.alpha_positive},
            {"e1_ok", c.e1_ok},
            {"e2_ok", c.e2_ok},
            {"damping_ok", c.damping_ok},
            {"blocks_ok", c.blocks_ok},
            {"pass", c.pass},
            {"blocks", blocks}};
}

json to_json(const HansonReport& r) {
    json j = {{"m", r.m},
              {"n", r.n},
              {"l1_norm", r.l1_norm},
              {"l1_error", r.l1_error},
              {"theorem_bound", r.theorem_bound},
              {"row_norms", r.row_norms},
              {"threshold_n_cube", r.threshold_n_cube},
              {"threshold_m_cube", r.threshold_m_cube},
              {"threshold_n_inv_cube", r.threshold_n_inv_cube},
              {"threshold_m_inv_cube", r.threshold_m_inv_cube},
              {"hypothesis_cube", r.hypothesis_cube},
              {"hypothesis_inv_cube", r.hypothesis_inv_cube},
              {"inequality_holds", r.inequality_holds},
              {"note", r.note}};
    if (r.split) j["split"] = {{"q", r.split->q}, {"s", r.split->s}, {"size", r.split->class_members.size()}, {"bounds_ok", r.split->bounds_ok}};
    if (r.class_sum) j["class_sum"] = {{"lhs", r.class_sum->lhs}, {"rhs", r.class_sum->rhs}, {"applicable", r.class_sum->applicable}, {"holds", r.class_sum->holds}};
    return j;
}

json to_json(const LacunaryReport& r) {
    return {{"q", r.q}, {"p", r.p}, {"K", r.K}, {"norm", r.norm}, {"error_bound", r.error_bound},
            {"l2", r.l2}, {"ratio", r.ratio}, {"lower_floor", r.lower_floor}, {"within", r.within}};
}

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t x) { return std::to_string(x); }

std::string Csv::str() const {
    std::ostringstream o;
    auto line = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
        o << '\n';
    };
    line(header);
    for (auto& r : rows) line(r);
    return o.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

}  // namespace triglab::io
