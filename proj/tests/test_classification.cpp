#include "svir/classification.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace svir;

TEST_CASE("dimension-1 sector group") {
    for (long n = 1; n <= 12; ++n) {
        auto g = dim1_group(n);
        CHECK(g.order() == 4 * n + 8);
        for (const auto& x : g.elements)
            CHECK(is_dim_one(x));
    }
    CHECK(dim1_group(1).invariant_factors == std::vector<long>{12});
    CHECK(dim1_group(2).invariant_factors == std::vector<long>{8, 2});
    CHECK(dim1_group(4).invariant_factors == std::vector<long>{12, 2});
    // designated generators
    auto g2 = dim1_group(2);
    REQUIRE(g2.tau.has_value());
    CHECK(*g2.tau == canonical(2, 2, 0, 0));
    auto g4 = dim1_group(4);
    REQUIRE(g4.tau.has_value());
    CHECK(*g4.tau == canonical(4, 0, 6, 0));
    CHECK(!dim1_group(3).tau.has_value());
}

TEST_CASE("maximal phase-1 subgroups at landmark levels") {
    // n=6: unique maximal subgroup, cyclic of order 4, generated by (6,4,0)
    auto m6 = phase_one_maximal_subgroups(6);
    REQUIRE(m6.size() == 1);
    CHECK(m6[0].order() == 4);
    CHECK(m6[0].invariant_factors == std::vector<long>{4});
    CHECK(m6[0] == generated_subgroup(6, {canonical(6, 6, 4, 0)}));

    // n=10: first case of [B], order 2 generated by (0,12,0)
    auto m10 = phase_one_maximal_subgroups(10);
    REQUIRE(m10.size() == 1);
    CHECK(m10[0] == generated_subgroup(10, {canonical(10, 0, 12, 0)}));

    // n=32: k=17, two maximal subgroups of order 4, six phase-1 sectors
    auto pred32 = case_formula_prediction(32);
    CHECK(pred32.case_tag == CaseTag::D);
    CHECK(pred32.k == 17);
    auto m32 = phase_one_maximal_subgroups(32);
    REQUIRE(m32.size() == 2);
    CHECK(m32[0].order() == 4);
    CHECK(m32[1].order() == 4);
    CHECK(phase_one_dim1_sectors(32).size() == 6);

    // brute force agrees with the case formulas on a sweep
    for (long n = 1; n <= 24; ++n) {
        auto brute = phase_one_maximal_subgroups(n);
        auto pred = case_formula_prediction(n);
        std::set<std::vector<CosetSector>> bs, ps;
        for (const auto& g : brute)
            bs.insert(g.elements);
        for (const auto& g : pred.groups)
            ps.insert(g.elements);
        CHECK(bs == ps);
    }
}

TEST_CASE("case B sub-case data is recorded") {
    auto p6 = case_formula_prediction(6);
    CHECK(p6.case_tag == CaseTag::B);
    CHECK(p6.k == 8);
    REQUIRE(p6.case_b_half_phase.has_value());
    CHECK(p6.case_b_half_phase->is_minus_one()); // alternating sub-case
    auto p10 = case_formula_prediction(10);
    REQUIRE(p10.case_b_half_phase.has_value());
    CHECK(!p10.case_b_half_phase->is_minus_one()); // +-i sub-case
}

TEST_CASE("exceptional catalog") {
    auto cat = exceptional_catalog();
    CHECK(cat.size() == 4);
    long n10 = std::count_if(cat.begin(), cat.end(), [](const auto& r) { return r.n == 10; });
    long n28 = std::count_if(cat.begin(), cat.end(), [](const auto& r) { return r.n == 28; });
    CHECK(n10 == 3);
    CHECK(n28 == 1);
    for (const auto& rec : cat) {
        auto dce = rec.dual_canonical_endomorphism();
        CHECK(dce.count(sector_identity(rec.n)) == 1);
    }
}

TEST_CASE("classification records") {
    // n=6: subgroups of Z/4 of orders 1, 2, 4
    auto recs6 = classify(6);
    CHECK(recs6.size() == 3);
    for (const auto& rec : recs6) {
        CHECK(rec.kind == ExtensionKind::SimpleCurrent);
        for (const auto& x : rec.sectors)
            CHECK(is_dim_one(x));
    }

    // n=10: trivial extension + three exceptional entries, the coinciding
    // sector set {1, (0,12,0)} reported once with embedding provenance
    auto recs10 = classify(10);
    CHECK(recs10.size() == 4);
    long exc = std::count_if(recs10.begin(), recs10.end(), [](const auto& r) {
        return r.kind != ExtensionKind::SimpleCurrent;
    });
    CHECK(exc == 3);

    // n=28: trivial + order-2 simple current + E8 exceptional
    auto recs28 = classify(28);
    CHECK(recs28.size() == 3);

    // n=2 = 2^2-2 carries the order-2 record generated by (0,4,0)
    auto recs2 = classify(2);
    bool found = std::any_of(recs2.begin(), recs2.end(), [](const auto& r) {
        return r.sectors == std::vector<CosetSector>{sector_identity(2), canonical(2, 0, 4, 0)};
    });
    CHECK(found);
}
