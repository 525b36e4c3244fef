#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <jetframe/errors.hpp>
#include <jetframe/json_io.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace jt;

TEST_CASE("variable ids") {
    std::vector<VarId> vs{VarId::z(2),     VarId::jet(1, 3),  VarId::geo(2, 1), VarId::t(2),
                          VarId::param(1, {0, 2}), VarId::w(1), VarId::logw(1, 2), VarId::wjet(2, 1)};
    for (auto& v : vs) CHECK(varid_from_json(to_json(v)) == v);
    Json j = to_json(VarId::jet(1, 3));
    CHECK(j["kind"] == "Jet");
    CHECK(j["i"] == 1);
    CHECK(j["p"] == 3);
    Json a = to_json(VarId::param(2, {1, 0, 2}));
    CHECK(a["j"] == 2);
    CHECK(a["alpha"] == Json::array({1, 0, 2}));
    CHECK_THROWS_AS(varid_from_json(Json{{"kind", "Nope"}}), ParseError);
    CHECK_THROWS_AS(varid_from_json(Json::array()), ParseError);
}

TEST_CASE("polynomials keep exact rationals") {
    Rng rng(3);
    std::vector<VarId> vars{VarId::z(1), VarId::jet(1, 1), VarId::param(1, {1, 1})};
    for (int t = 0; t < 20; ++t) {
        Poly p = random_poly(rng, vars, 5, 3);
        CHECK(poly_from_json(to_json(p)) == p);
        FracPoly f(p, Monomial(VarId::jet(1, 1), rng.uniform(0, 3)));
        CHECK(fracpoly_from_json(to_json(f)) == f);
    }
    Json j = to_json(Poly(Rational(-3, 4)));
    CHECK(j[0]["coef"] == "-3/4");
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"exponents": [], "coef": "1/0"}])")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"exponents": [], "coef": "x"}])")), ParseError);
}

TEST_CASE("vector fields") {
    JetConfig cfg = JetConfig::make(2, 2, {3});
    FieldForge forge(cfg);
    for (int q = 1; q <= 2; ++q) {
        VectorField v = forge.T_jq(2, q);
        Json j = to_json(v, cfg.pivot_jet());
        CHECK(vectorfield_from_json(j) == v);
        for (auto& c : j["coeffs"]) CHECK(c.contains("epow"));
    }
}

TEST_CASE("configs and curves") {
    for (auto cfg : {JetConfig::make(2, 2, {3}), JetConfig::make(3, 1, {2, 2}, Case::Compact, 2),
                     JetConfig::make(1, 1, {2}, Case::Logarithmic)})
        CHECK(config_from_json(to_json(cfg)) == cfg);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"n": 2, "k": 0, "degrees": [2], "case": "compact"})")),
                    InvalidConfig);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"n": 2, "k": 1, "degrees": [2], "case": "other"})")),
                    Error);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"k": 1})")), ParseError);
}

TEST_CASE("frames round trip and dump deterministically") {
    for (auto cfg : {JetConfig::make(2, 1, {2}), JetConfig::make(1, 1, {2}, Case::Logarithmic)}) {
        FrameSpec spec = assemble_frame(cfg);
        std::string a = dump(to_json(spec));
        FrameSpec back = framespec_from_json(Json::parse(a));
        CHECK(back.cfg == spec.cfg);
        REQUIRE(back.fields.size() == spec.fields.size());
        for (std::size_t i = 0; i < back.fields.size(); ++i) {
            CHECK(back.fields[i].field == spec.fields[i].field);
            CHECK(back.fields[i].tag == spec.fields[i].tag);
            CHECK(back.fields[i].pole_order == spec.fields[i].pole_order);
        }
        CHECK(dump(to_json(back)) == a);
        CHECK(dump(to_json(assemble_frame(cfg))) == a);
        CHECK(a.back() == '\n');
    }
}

TEST_CASE("reports and files") {
    JetConfig cfg = JetConfig::make(2, 1, {2});
    Report r = verify_frame(assemble_frame(cfg), VerifyOptions{});
    Json j = to_json(r);
    CHECK(j["pass"] == true);
    CHECK(j.contains("rank_results"));
    CHECK(dump(j) == dump(to_json(verify_frame(assemble_frame(cfg), VerifyOptions{}))));

    std::string path = "jetframe_json_test.json";
    write_text_file(path, dump(to_json(cfg)));
    CHECK(config_from_json(read_json_file(path)) == cfg);
    write_text_file(path, "{ not json");
    CHECK_THROWS_AS(read_json_file(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("does/not/exist.json"), ParseError);
}
