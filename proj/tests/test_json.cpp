#include <doctest.h>

#include <json.hpp>

#include "springer/classify.hpp"
#include "springer/orbit.hpp"
#include "springer/report_json.hpp"

using namespace springer;
using nlohmann::json;

TEST_CASE("pattern and orbit payloads") {
    auto pi = LinkPattern::parse("1 2 5 | 3 8 | 6 7 | 4");
    auto j = to_json(pi);
    CHECK(j["n"] == 8);
    CHECK(j["blocks"].size() == 4);
    CHECK(j["blocks"][0] == json::array({1, 2, 5}));

    auto a = to_json(analyze_orbit(pi));
    for (const char* key : {"pattern", "stab_dim", "orbit_dim", "springer_dim", "dense"})
        CHECK(a.contains(key));
    CHECK(a["stab_dim"].is_number_integer());
    CHECK(a["dense"].is_boolean());
    CHECK(a["stab_dim"] == 20);
    CHECK(a["orbit_dim"] == a["springer_dim"].get<long long>() - 3);
}

TEST_CASE("component report payload") {
    auto rep = classify_tableau(tableau_from_composition(Composition::parse("1,2,2,1")));
    auto j = to_json(rep);
    CHECK(j["tableau"] == json::array({{1, 3}, {2, 5}, {4}, {6}}));
    CHECK(j["shape"] == json::array({2, 2, 1, 1}));
    CHECK(j["dim"] == 7);
    CHECK(j["class"].is_array());
    for (const auto& tag : j["class"])
        CHECK((tag == "BC" || tag == "R" || tag == "genBC" || tag == "genR"));
    CHECK(j["bc_composition"] == json::array({1, 2, 2, 1}));
    CHECK(j["singular"]["verdict"] == "singular");
    CHECK(j["singular"]["witness"]["pattern"] == json::array({1, 2, 2, 1}));
    CHECK(j["singular"].contains("reason"));
}

TEST_CASE("atlas payload") {
    auto atlas = classify_shape(Partition::parse("2,2,1,1"));
    auto j = to_json(atlas);
    for (const char* key : {"shape", "n", "reports", "summary", "tool_version"})
        CHECK(j.contains(key));
    CHECK(j["n"] == 6);
    CHECK(j["tool_version"] == "0.1.0");
    CHECK(j["reports"].size() == 9);
    const auto& s = j["summary"];
    for (const char* key : {"components", "bala_carter", "richardson", "generalized_bc",
                            "generalized_richardson", "singular", "smooth", "unknown",
                            "exists_singular"})
        CHECK(s.contains(key));
    CHECK(s["components"] == 9);
    CHECK(s["bala_carter"] == 6);
    CHECK(s["exists_singular"] == true);
    CHECK(s["singular"].get<int>() + s["smooth"].get<int>() + s["unknown"].get<int>() ==
          s["components"].get<int>());
    // serialization is stable
    CHECK(to_json(atlas).dump() == j.dump());
}

TEST_CASE("smooth report omits the witness") {
    auto rep = classify_tableau(tableau_from_composition(Composition::parse("3,2,2")));
    auto j = to_json(rep);
    CHECK(j["singular"]["verdict"] == "smooth");
    CHECK_FALSE(j["singular"].contains("witness"));
}
