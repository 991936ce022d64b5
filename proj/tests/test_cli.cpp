#include "svir/jsonio.hpp"

#include <doctest.h>

using namespace svir;

TEST_CASE("serialization formats") {
    CHECK(to_json(Rational(-3, 4)) == Json("-3/4"));
    CHECK(to_json(Rational(2)) == Json("2"));
    CHECK(to_json(phase_from_exponent(Rational(5, 4))).dump() == R"({"exp":"1/4"})");
    CHECK(to_json(gen_Gp(Rational(-1, 2))).dump() == R"({"fam":"G+","idx":"-1/2"})");
    CHECK(to_json(gen_central()).dump() == R"({"fam":"C","idx":"0"})");

    AlgebraElement x;
    x.add(gen_L(Rational(0)), Scalar(2));
    Json jx = to_json(x);
    REQUIRE(jx.is_array());
    CHECK(jx[0]["fam"] == "L");
    CHECK(jx[0]["coeff"]["a"] == "2");

    CHECK(to_json(canonical(2, 1, 1, 0)).dump() == R"({"l":1,"m":1,"s":0})");
}

TEST_CASE("module summary schema") {
    ModuleHandle mod({Rational(1), Rational(0), Rational(0), SectorType::NS}, Rational(1));
    Json j = module_summary_json(mod);
    CHECK(j["c"] == "1");
    CHECK(j["type"] == "NS");
    REQUIRE(j["levels"].size() == 3);
    CHECK(j["levels"][0]["level"] == "0");
    CHECK(j["levels"][0]["dim_verma"] == 1);
    CHECK(j["levels"][1]["level"] == "1/2");
    CHECK(j["levels"][1]["dim_verma"] == 2);
    CHECK(j["levels"][1]["dim_irred"] == 0);
    CHECK(j["levels"][2]["dim_irred"] == 1);
    for (const auto& lv : j["levels"])
        CHECK(lv["psd"] == true);
}

TEST_CASE("deterministic output") {
    auto render = []() {
        Json levels = Json::array();
        for (const auto& rec : classify(10))
            levels.push_back(to_json(rec));
        return envelope("classify", Json{{"n", 10}}, levels).dump();
    };
    CHECK(render() == render());
}

TEST_CASE("envelope layout") {
    Json env = envelope("fuse", Json{{"n", 2}}, Json::array());
    auto it = env.begin();
    CHECK(it.key() == "command");
    CHECK(env["version"] == version_string());
}
