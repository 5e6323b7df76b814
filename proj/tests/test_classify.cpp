#include <doctest.h>

#include "springer/classify.hpp"
#include "springer/errors.hpp"

using namespace springer;

TEST_CASE("singularity criterion") {
    auto r = bc_is_singular(Composition::parse("1,2,2,1"));
    CHECK(r.verdict == Verdict::singular);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->forbidden == std::vector<int>{1, 2, 2, 1});
    CHECK(r.witness->indices == std::vector<int>{1, 2, 3, 4});

    r = bc_is_singular(Composition::parse("2,3,1,2"));
    CHECK(r.verdict == Verdict::singular);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->forbidden == std::vector<int>{2, 3, 2});
    CHECK(r.witness->indices == std::vector<int>{1, 2, 4});

    CHECK(bc_is_singular(Composition::parse("3,2,2")).verdict == Verdict::smooth);
    CHECK(bc_is_singular(Composition::parse("2,2,3")).verdict == Verdict::smooth);
    CHECK(bc_is_singular(Composition::parse("5,4")).verdict == Verdict::smooth);

    CHECK_FALSE(all_bc_singular(Partition::parse("2,2,1,1")));
    CHECK(all_bc_singular(Partition::parse("2,2,2,2")));
    CHECK(all_bc_singular(Partition::parse("3,3,3")));
}

TEST_CASE("interval composition recovery") {
    auto t = tableau_from_composition(Composition::parse("2,3,1,2"));
    auto pi = bala_carter_composition(t);
    REQUIRE(pi.has_value());
    CHECK(*pi == Composition::parse("2,3,1,2"));
    // non-interval component of shape (2,2,1,1)
    CHECK_FALSE(bala_carter_composition(StandardTableau::parse("1 4 / 2 5 / 3 / 6")).has_value());
    // round trip over every composition of every shape of 7
    for (const auto& la : partitions_of(7))
        for (const auto& c : distinct_permutations(la)) {
            auto got = bala_carter_composition(tableau_from_composition(c));
            REQUIRE(got.has_value());
            CHECK(*got == c);
        }
}

TEST_CASE("dense pattern search") {
    // interval patterns are always found
    auto t = tableau_from_composition(Composition::parse("2,3,2"));
    auto p = dense_jordan_pattern(t);
    REQUIRE(p.has_value());
    CHECK(tableau_of_pattern(*p) == t);
    CHECK(in_pi1(*p));

    // the non-interval dense pattern from the worked graphs
    auto s = tableau_of_pattern(LinkPattern::parse("1 5 | 2 3 4 | 6 7"));
    auto q = dense_jordan_pattern(s);
    REQUIRE(q.has_value());
    CHECK(*q == LinkPattern::parse("1 5 | 2 3 4 | 6 7"));

    // found patterns are unique on the crossing-free class: the tableau map
    // is injective there
    for (const auto& la : partitions_of(6)) {
        for (const auto& pat : enumerate_patterns(la, PatternFilter::pi1_only)) {
            auto found = dense_jordan_pattern(tableau_of_pattern(pat));
            REQUIRE(found.has_value());
            CHECK(*found == pat);
        }
    }
}

TEST_CASE("component reports") {
    // the singular interval component of (2,2,1,1)
    auto rep = classify_tableau(tableau_from_composition(Composition::parse("1,2,2,1")));
    CHECK(rep.bala_carter);
    CHECK(rep.generalized_bc);
    CHECK(rep.singular.verdict == Verdict::singular);
    CHECK(rep.dim == 7);
    REQUIRE(rep.bc_composition.has_value());
    CHECK(*rep.bc_composition == Composition::parse("1,2,2,1"));

    // two-row components are bundles over projective spaces
    auto two_row = classify_tableau(StandardTableau::parse("1 3 / 2 4"));
    CHECK(two_row.generalized_richardson);
    CHECK(two_row.singular.verdict == Verdict::smooth);
    REQUIRE(two_row.bundle_base.has_value());
    CHECK(*two_row.bundle_base == std::vector<int>{1, 1});

    // hook shapes are smooth whatever the class
    auto hook = classify_tableau(StandardTableau::parse("1 4 / 2 / 3"));
    CHECK(hook.singular.verdict == Verdict::smooth);
}

TEST_CASE("classification flags are nested") {
    for (const auto& la : partitions_of(7)) {
        auto atlas = classify_shape(la);
        CHECK(atlas.summary.components == static_cast<int>(enumerate_standard(la).size()));
        CHECK(atlas.summary.bala_carter ==
              static_cast<int>(distinct_permutations(la).size()));
        for (const auto& r : atlas.reports) {
            if (r.bala_carter) CHECK(r.generalized_bc);
            if (r.richardson) CHECK(r.generalized_richardson);
            if (r.generalized_richardson) CHECK(r.bundle_base.has_value());
        }
        CHECK(atlas.summary.exists_singular == has_singular_component(la));
    }
}

TEST_CASE("sum dimensions") {
    CHECK(sum_component_dims(StandardTableau::parse("1 2 / 3 / 4 / 5"),
                             StandardTableau::parse("1 3 / 2 4")) ==
          springer_fiber_dim(Partition::parse("4,3,1,1")));
    CHECK(sum_component_dims(StandardTableau::parse("1"), StandardTableau::parse("1")) == 0);
}

TEST_CASE("bundle base requires a dense transpose") {
    CHECK_THROWS_AS(fiber_bundle_base(StandardTableau::parse("1 4 / 2 5 / 3 / 6")),
                    precondition_error);
}
