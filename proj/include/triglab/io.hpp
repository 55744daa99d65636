#pragma once

#include "triglab/hanson.hpp"
#include "triglab/ingham.hpp"
#include "triglab/kernels.hpp"
#include "triglab/mps.hpp"
#include "triglab/nazarov.hpp"
#include "triglab/norms.hpp"
#include "triglab/stochastics.hpp"
#include "triglab/trigpoly.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace triglab::io {

using json = nlohmann::json;

// {"freqs":[...], "coeffs":[[re,im],...]}
json to_json(const TrigPoly& P);
TrigPoly poly_from_json(const json& j);
TrigPoly read_poly(const std::string& path);

json to_json(const CertifiedValue& v);
json to_json(const FrameReport& r);
json to_json(const DiscreteKernel& K);
json to_json(const MpsCertificate& c);
json to_json(const NazarovCertificate& c);
json to_json(const HansonReport& r);
json to_json(const LacunaryReport& r);

// 17 significant digits, '.' decimal regardless of locale
std::string fmt(double x);
std::string fmt(std::int64_t x);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string str() const;
};

void write_text(const std::string& path, const std::string& text);

}  // namespace triglab::io
