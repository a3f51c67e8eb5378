#include "abelaut/error.hpp"
#include "abelaut/report/json_io.hpp"
#include "abelaut/report/run.hpp"
#include "abelaut/torus/fixtures.hpp"

#include <gtest/gtest.h>

using namespace abelaut;

namespace {

std::string fixture(const std::string& name) { return std::string(ABELAUT_FIXTURE_DIR) + "/" + name; }

std::string parse_error_location(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.location();
    }
    return "<no error>";
}

}  // namespace

TEST(JsonIo, GaussianCurve) {
    const auto t = parse_torus(load_json_file(fixture("gaussian_curve.json")));
    EXPECT_EQ(t.g, 1u);
    EXPECT_EQ(t.J, to_surd(int_matrix({{0, -1}, {1, 0}})));
    const auto w = parse_torus(load_json_file(fixture("eisenstein_curve.json")));
    EXPECT_EQ(w.J, fixtures::eisenstein_curve().J);
}

TEST(JsonIo, ErrorLocations) {
    EXPECT_EQ(parse_error_location([] { load_json_file(fixture("malformed_torus.json")); }),
              fixture("malformed_torus.json") + ":4:1");
    EXPECT_EQ(parse_error_location([] { parse_system(load_json_file(fixture("bad_entry_torus.json"))); }), "$.J[1][1]");
    EXPECT_EQ(parse_error_location([] { parse_json_text("{\n  \"J\": [1, 2,]\n}", "inline"); }), "inline:2:14");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"g": 2, "J": [["0","-1"],["1","0"]]})")); }), "$.g");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"J": [["1","0"],["0","1"]]})")); }), "$.J");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"factors": [{"J": [["0","-1"],["1","0"]]}, {"J": [["0","-1"]]}]})")); }),
              "$.factors[1].J[0]");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"J": [["0","-1"],["1","0"]], "P": ["1/7"]})")); }), "$.P");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"J": [["0","-1"],["1","0"]], "p": 9})")); }), "$.p");
    EXPECT_EQ(parse_error_location([] { parse_system(Json::parse(R"({"g": 1})")); }), "$");
    EXPECT_EQ(parse_error_location([] {
                  parse_candidates(Json::parse(R"({"candidates": [{"phi": "identity", "c": ["0","0"]}, {"phi": [[1,0],[0,2]], "c": ["0","0"]}]})"), 2);
              }),
              "$.candidates[1].phi");
}

TEST(JsonIo, DecompositionRoundTrip) {
    for (const auto& d : {fixtures::cm_product(), fixtures::glued_product(), fixtures::gaussian_square()}) {
        const Json j = decomposition_to_json(d);
        const auto back = parse_system(Json::parse(j.dump()));
        EXPECT_EQ(back.decomp.product.J, d.product.J);
        EXPECT_EQ(back.decomp.sigma, d.sigma);
        EXPECT_EQ(decomposition_to_json(back.decomp).dump(), j.dump());
    }
    const auto x = TorsionPoint::parse({"1/7", "-1/3", "5/2", "0"});
    EXPECT_EQ(point_from_json(Json::parse(to_json(x).dump()), "$"), x);
    EXPECT_EQ(x.to_strings(), (std::vector<std::string>{"1/7", "2/3", "1/2", "0"}));
}

TEST(JsonIo, SystemFields) {
    const auto s = parse_system(load_json_file(fixture("glued_product.json")));
    EXPECT_FALSE(s.single_torus);
    EXPECT_EQ(s.decomp.h(), 2u);
    EXPECT_EQ(s.decomp.N(), Integer(2));
    EXPECT_EQ(s.p, 7u);
    EXPECT_EQ(s.names, (std::vector<std::string>{"Z[i]", "Z[zeta_6]"}));
    ASSERT_TRUE(s.P.has_value());
    EXPECT_EQ(*s.P, fixtures::default_point(7));
    const auto c = parse_candidates(load_json_file(fixture("e2_shear_candidates.json")), 4);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[3].phi, fixtures::shear().pow(7));
    EXPECT_TRUE(c[0].is_translation());
}

TEST(Run, SurfaceReportFields) {
    RunConfig config;
    config.command = Command::verify_surface;
    config.q_list = {29};
    const auto report = run(config);
    EXPECT_TRUE(report.passed);
    const auto& s = report.body["surface"];
    for (const char* key : {"p", "lambda", "q", "smooth", "group_order", "is_cyclic", "generator_matrix", "fixed_point_free",
                            "negative_controls"})
        EXPECT_TRUE(s.contains(key)) << key;
    EXPECT_EQ(s["group_order"], 7);
    EXPECT_EQ(s["q"], 29);
    EXPECT_EQ(report.body["schema"], "abelaut-report/1");
    EXPECT_EQ(report.body["tool_version"], kToolVersion);
    EXPECT_FALSE(report.body.contains("timing"));
}

TEST(Run, FermatControlFails) {
    RunConfig config;
    config.command = Command::verify_surface;
    config.lambda = Rational(0);
    config.lambda_given = true;
    config.q_list = {29};
    const auto report = run(config);
    EXPECT_FALSE(report.passed);
    EXPECT_GT(report.body["surface"]["group_order"].get<int>(), 7);
}

TEST(Run, ConstructionReportFields) {
    RunConfig config;
    config.command = Command::verify_construction;
    config.input_path = fixture("glued_product.json");
    const auto report = run(config);
    EXPECT_TRUE(report.passed);
    const auto& c = report.body["construction"];
    for (const char* key : {"datum_valid", "star_ok", "double_star_ok", "freeness", "no_section", "candidates", "inductive_step"})
        EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_EQ(c["inductive_step"]["N"], 2);
    EXPECT_EQ(c["inductive_step"]["N_prime"], 1);
    EXPECT_EQ(c["inductive_step"]["K_order"], 2);
    for (const auto& cand : c["candidates"]) {
        EXPECT_TRUE(cand.contains("descent"));
        EXPECT_TRUE(cand.contains("verdict"));
    }
}

TEST(Run, ShearCounterexampleIsReportedAsFailure) {
    RunConfig config;
    config.command = Command::verify_construction;
    config.input_path = fixture("e2_shear.json");
    config.candidates_path = fixture("e2_shear_candidates.json");
    const auto report = run(config);
    EXPECT_FALSE(report.passed);
    const auto& cands = report.body["construction"]["candidates"];
    ASSERT_EQ(cands.size(), 4u);
    EXPECT_EQ(cands[3]["descent"], true);
    EXPECT_EQ(cands[3]["verdict"], "exceptional");
}

TEST(Run, ErrorsForBadInput) {
    RunConfig config;
    config.command = Command::verify_torus;
    config.input_path = fixture("malformed_torus.json");
    EXPECT_THROW(run(config), ParseError);
    config.input_path = fixture("does_not_exist.json");
    EXPECT_THROW(run(config), Error);
    config.command = Command::verify_surface;
    config.p = 5;
    EXPECT_THROW(run(config), Error);
}

TEST(Run, DeterministicJson) {
    RunConfig config;
    config.command = Command::full_paper;
    config.q_list = {29};
    const auto a = render_report(run(config), EmitFormat::json);
    const auto b = render_report(run(config), EmitFormat::json);
    EXPECT_EQ(a, b);
    EXPECT_EQ(Json::parse(a)["passed"], true);
    config.seed = 7;
    const auto c = render_report(run(config), EmitFormat::json);
    EXPECT_NE(a, c);
    EXPECT_EQ(Json::parse(c)["passed"], true);
}

TEST(Run, TextRendering) {
    RunConfig config;
    config.command = Command::verify_torus;
    config.input_path = fixture("gaussian_curve.json");
    const auto text = render_report(run(config), EmitFormat::text);
    EXPECT_EQ(text.rfind("PASS verify-torus\n", 0), 0u);
    EXPECT_NE(text.find("endomorphism_rank: 2"), std::string::npos);
    config.timing = true;
    EXPECT_TRUE(run(config).body.contains("timing"));
}
