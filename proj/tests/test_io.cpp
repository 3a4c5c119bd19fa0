#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "edgeband/io.hpp"
#include "support/testgen.hpp"

using namespace edgeband;

namespace {

const char* kReferenceJson = R"({
  "params": {"B": 1e6, "S_u": 1, "S_d": 1, "N": 10, "F": 1000,
             "T_total": 10, "M_max": 1e6, "b": 8},
  "levels": [
    {"q": 8, "g": {"family": "quadratic", "coeffs": {"a": 0.5, "c": 0.3, "d": 0.1}}},
    {"q": 16, "g": {"family": "tabulated", "points": [[0, 0.5], [0.5, 0.68], [1, 0.72]]}}
  ],
  "fusion": {"mAP_pre": 0.4, "phi": {"family": "power", "coeffs": {"gamma": 1.5}}}
})";

}  // namespace

TEST_CASE("instance JSON parses into the expected model") {
    auto inst = instance_from_json_text(kReferenceJson);
    CHECK(inst.params.bandwidth_hz == 1e6);
    CHECK(inst.params.bits_per_param == 8.0);
    REQUIRE(inst.levels.size() == 2);
    CHECK(inst.levels[0].q == 8.0);
    CHECK(inst.levels[0].g.family == GFamily::Quadratic);
    CHECK(inst.levels[1].g.family == GFamily::Tabulated);
    CHECK(inst.levels[1].g(0.5) == 0.68);
    CHECK(inst.fusion.map_pre == 0.4);
    CHECK(inst.fusion.phi.family == PhiFamily::Power);
    CHECK(validate_instance(inst).ok());
}

TEST_CASE("schema errors are reported with context") {
    CHECK_THROWS_AS(instance_from_json_text("not json"), SchemaError);
    CHECK_THROWS_AS(instance_from_json_text("{}"), SchemaError);
    CHECK_THROWS_AS(instance_from_json_text(R"({"params": {}, "levels": [], "fusion": {}})"),
                    SchemaError);

    std::string bad_family = kReferenceJson;
    auto pos = bad_family.find("quadratic");
    bad_family.replace(pos, 9, "quintic42");
    CHECK_THROWS_AS(instance_from_json_text(bad_family), SchemaError);

    CHECK_THROWS_AS(instance_from_json_text(R"({
        "params": {"B": 1, "S_u": 1, "S_d": 1, "N": 1, "F": 1, "T_total": 1, "M_max": 1, "b": 1},
        "levels": [{"q": 8, "g": {"family": "tabulated", "points": [[0, "x"]]}}],
        "fusion": {"mAP_pre": 0.4, "phi": {"family": "identity"}}
      })"),
                    SchemaError);
}

TEST_CASE("result JSON carries the documented fields in order") {
    auto res = solve(instance_from_json_text(kReferenceJson));
    std::string text = result_to_json(res);
    size_t last = 0;
    for (const char* key :
         {"\"M_opt\"", "\"M_opt_int\"", "\"q_opt\"", "\"rho_opt\"", "\"T_u_opt\"", "\"T_d_opt\"",
          "\"mAP_star_opt\"", "\"mAP_opt\"", "\"diagnostics\"", "\"active_segment\"",
          "\"objective_evaluations\"", "\"envelope_knots\"", "\"mAP_at_floor\"", "\"mAP_at_ceil\"",
          "\"no_downlink\""}) {
        size_t at = text.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at > last);
        last = at;
    }
}

TEST_CASE("envelope CSV has the documented shape") {
    auto inst = instance_from_json_text(kReferenceJson);
    auto env = build_envelope(inst);
    std::string csv = envelope_to_csv(env, 16);
    CHECK(csv.rfind("M,L_M,q,rho\n", 0) == 0);
    size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows >= 17);  // header + 16 samples + knots

    // First data row is M=0 with the best capped plateau.
    auto line_end = csv.find('\n', csv.find('\n') + 1);
    std::string first = csv.substr(csv.find('\n') + 1, line_end - csv.find('\n') - 1);
    CHECK(first.rfind("0,", 0) == 0);
}

TEST_CASE("oracle result JSON is deterministic") {
    auto inst = instance_from_json_text(kReferenceJson);
    GridSpec grid{41, 41, 100000};
    auto a = oracle_result_to_json(brute_force(inst, grid));
    auto b = oracle_result_to_json(brute_force(inst, grid));
    CHECK(a == b);
    CHECK(a.find("\"mAP\"") != std::string::npos);
}

TEST_CASE("file round trip") {
    std::string path = "io_test_tmp.json";
    write_file(path, kReferenceJson);
    auto inst = load_instance(path);
    CHECK(inst.params.model_params == 1e6);
    CHECK_THROWS(load_instance("definitely_missing_file.json"));
}
