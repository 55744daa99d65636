#include "gen.hpp"
#include "triglab/error.hpp"
#include "triglab/io.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>

using namespace triglab;
using io::json;

TEST(Io, PolyRoundTrip) {
    gen::Rng rng(101);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 1 + gen::integer(rng, 0, 30);
        TrigPoly P(gen::separated(rng, n, 0.5, 2.0), gen::coeffs(rng, n));
        const std::string s = io::to_json(P).dump();
        auto Q = io::poly_from_json(json::parse(s));
        EXPECT_EQ(P.freqs(), Q.freqs());
        EXPECT_EQ(P.coeffs(), Q.coeffs());
    }
}

TEST(Io, PolyAcceptsRealCoefficients) {
    auto P = io::poly_from_json(json::parse(R"({"freqs":[0,1,3],"coeffs":[1,[0,2],-0.5]})"));
    EXPECT_EQ(P.coeffs()[0], cplx(1, 0));
    EXPECT_EQ(P.coeffs()[1], cplx(0, 2));
    EXPECT_EQ(P.coeffs()[2], cplx(-0.5, 0));
    EXPECT_THROW(io::poly_from_json(json::parse(R"({"freqs":[0]})")), Error);
    EXPECT_THROW(io::poly_from_json(json::parse(R"({"freqs":[0],"coeffs":[[1,2,3]]})")), Error);
    EXPECT_THROW(io::poly_from_json(json::parse(R"({"freqs":["a"],"coeffs":[1]})")), Error);
    EXPECT_THROW(io::poly_from_json(json::parse(R"({"freqs":[1,0],"coeffs":[1,1]})")), Error);
}

TEST(Io, ReadPolyFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "triglab_io_test.json";
    io::write_text(path.string(), R"({"freqs":[0,2],"coeffs":[1,1]})");
    auto P = io::read_poly(path.string());
    EXPECT_EQ(P.size(), 2u);
    std::filesystem::remove(path);
    EXPECT_THROW(io::read_poly("/nonexistent/triglab.json"), Error);
}

TEST(Io, FmtRoundTrips) {
    gen::Rng rng(102);
    for (int it = 0; it < 2000; ++it) {
        const double x = std::ldexp(gen::uniform(rng, -1, 1), static_cast<int>(gen::integer(rng, -300, 300)));
        const std::string s = io::fmt(x);
        double y = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), y);
        EXPECT_EQ(x, y) << s;
        EXPECT_EQ(s.find(','), std::string::npos);
    }
    EXPECT_EQ(io::fmt(0.5), "0.5");
    EXPECT_EQ(io::fmt(std::int64_t(-42)), "-42");
    EXPECT_EQ(io::fmt(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Io, CsvLayout) {
    io::Csv c{{"a", "b"}, {{"1", "2"}, {"3", "4"}}};
    EXPECT_EQ(c.str(), "a,b\n1,2\n3,4\n");
}

TEST(Io, CertificateSchemas) {
    auto P = make({0, 1, 2}, {1.0, 1.0, 1.0});
    auto m = io::to_json(build_dual(P));
    for (const char* k : {"eta", "S", "sup_T1", "deviations", "certified_bound", "pass"}) EXPECT_TRUE(m.contains(k)) << k;
    auto n = io::to_json(build_dual_nazarov(P, 0.5));
    for (const char* k : {"delta", "N_delta", "alpha_emp", "e1", "e2", "realized_constant", "pass"}) EXPECT_TRUE(n.contains(k)) << k;
    auto K = io::to_json(hanson_kernel(2, 2));
    EXPECT_EQ(K["lo"].get<int>(), -5);
    EXPECT_EQ(K["values"].size(), 11u);
    auto f = io::to_json(frame_report({0, 1, 2}, 2.0));
    EXPECT_EQ(f["lower_ok"].get<bool>(), true);
    NazarovCertificate voided;
    voided.realized_constant = std::numeric_limits<double>::infinity();
    EXPECT_TRUE(io::to_json(voided)["realized_constant"].is_null());
}
