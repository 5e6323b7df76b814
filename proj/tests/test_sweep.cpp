#include <doctest.h>

#include "springer/classify.hpp"
#include "springer/link_pattern.hpp"
#include "springer/orbit.hpp"
#include "springer/sweep.hpp"

using namespace springer;

TEST_CASE("parallel map matches the serial path") {
    std::vector<LinkPattern> pats;
    for (const auto& la : partitions_of(6))
        for (const auto& p : enumerate_patterns(la)) pats.push_back(p);

    auto serial = parallel_map(pats, 1, [](const LinkPattern& p) { return analyze_orbit(p); });
    auto par = parallel_map(pats, 4, [](const LinkPattern& p) { return analyze_orbit(p); });
    REQUIRE(serial.size() == par.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].stab_dim == par[i].stab_dim);
        CHECK(serial[i].orbit_dim == par[i].orbit_dim);
        CHECK(serial[i].dense == par[i].dense);
    }
}

TEST_CASE("shape classification is independent of the job count") {
    auto la = Partition::parse("3,2,2");
    auto one = classify_shape(la, 1);
    auto many = classify_shape(la, 8);
    REQUIRE(one.reports.size() == many.reports.size());
    for (std::size_t i = 0; i < one.reports.size(); ++i) {
        CHECK(one.reports[i].tableau == many.reports[i].tableau);
        CHECK(one.reports[i].singular.verdict == many.reports[i].singular.verdict);
        CHECK(one.reports[i].dim == many.reports[i].dim);
    }
    CHECK(one.summary.singular == many.summary.singular);
}

TEST_CASE("empty input") {
    std::vector<int> none;
    auto out = parallel_map(none, 4, [](int x) { return x * x; });
    CHECK(out.empty());
}
