#include "svir/unitarity.hpp"

#include <doctest.h>

#include <algorithm>

using namespace svir;

TEST_CASE("discrete series weight formulas") {
    CHQ w = hq_ns({1, 1, 1});
    CHECK(w.c == Rational(1));
    CHECK(w.h == Rational(1, 6));
    CHECK(w.q == Rational(-1, 3));

    // NS (0,0) is the vacuum for every n
    for (long n : {0L, 1L, 5L, 12L}) {
        CHQ v = hq_ns({n, 0, 0});
        CHECK(v.h == Rational(0));
        CHECK(v.q == Rational(0));
    }

    // R (0,1) at n=1: h = 1/24 = c/24, q = 1/6 -- a Ramond vacuum label
    CHQ r = hq_r({1, 0, 1});
    CHECK(r.h == Rational(1, 24));
    CHECK(r.h == r.c * Rational(1, 24));
    CHECK(r.q == Rational(1, 6));

    CHECK_THROWS_AS(hq_ns({1, 1, 0}), std::domain_error); // parity violation
    CHECK_THROWS_AS(hq_r({1, 0, 0}), std::domain_error);  // |m-1| > l
}

TEST_CASE("label enumeration") {
    auto ns1 = enumerate_labels(1, SectorType::NS);
    std::vector<DiscreteLabel> want_ns = {{1, 0, 0}, {1, 1, -1}, {1, 1, 1}};
    std::sort(ns1.begin(), ns1.end());
    CHECK(ns1 == want_ns);

    auto r1 = enumerate_labels(1, SectorType::R);
    std::vector<DiscreteLabel> want_r = {{1, 0, 1}, {1, 1, 0}, {1, 1, 2}};
    std::sort(r1.begin(), r1.end());
    CHECK(r1 == want_r);

    auto ns0 = enumerate_labels(0, SectorType::NS);
    CHECK(ns0 == std::vector<DiscreteLabel>{{0, 0, 0}});
}

TEST_CASE("region check") {
    // c=3 degenerates NS1 to q=0, h>=0
    CHECK(region_check(SectorType::NS, Rational(3), Rational(1), Rational(0)).region ==
          Region::NS1);
    CHECK(region_check(SectorType::NS, Rational(3), Rational(1), Rational(1)).region ==
          Region::None);

    auto res = region_check(SectorType::NS, Rational(1), Rational(1, 6), Rational(-1, 3));
    CHECK(res.region == Region::NS3);
    REQUIRE(res.labels.size() == 1);
    CHECK(res.labels[0] == DiscreteLabel{1, 1, 1});
    CHECK(res.sufficient);

    CHECK(region_check(SectorType::NS, Rational(1), Rational(1, 6) + Rational(1, 137),
                       Rational(-1, 3))
              .region == Region::None);

    // generic c > 3 interior point
    CHECK(region_check(SectorType::NS, Rational(6), Rational(2), Rational(0)).region ==
          Region::NS1);
    // R1 at c=3 needs q=1/2 and h>=1/8
    CHECK(region_check(SectorType::R, Rational(3), Rational(1, 8), Rational(1, 2)).region ==
          Region::R1);
    CHECK(region_check(SectorType::R, Rational(3), Rational(1, 16), Rational(1, 2)).region ==
          Region::None);

    // R2 witness: c=6, qeff = q-1/2 = 2, h = 7/4: root at n=1, dip at n=2,
    // aux = 2(c/3-1)(h-c/24) - qeff^2 + c/3 = 3 - 4 + 2 >= 0.
    auto r2 = region_check(SectorType::R, Rational(6), Rational(7, 4), Rational(5, 2));
    CHECK(r2.region == Region::R2);
    CHECK(!r2.sufficient);

    // NS2 witness: c=6, pick the boundary at n=1/2 with a strict dip at 3/2.
    // f(n) = n^2 - 2qn + 2h - 1/4 with lead = 1; choose q=3/2, h=3/4:
    // f(1/2) = 1/4 - 3/2 + 3/2 - 1/4 = 0, f(3/2) = 9/4 - 9/2 + 5/4 = -1 < 0,
    // aux = 2h - q^2 + 2 = 3/2 - 9/4 + 2 >= 0.
    auto ns2 = region_check(SectorType::NS, Rational(6), Rational(3, 4), Rational(3, 2));
    CHECK(ns2.region == Region::NS2);
    CHECK(!ns2.sufficient);
}

TEST_CASE("maximal NS lowest energy") {
    for (long n : {2L, 4L, 20L}) {
        auto [h, labels] = max_ns_energy(n);
        CHECK(h == Rational(n, 4));
        REQUIRE(labels.size() == 1);
        CHECK(labels[0] == DiscreteLabel{n, n, 0});
    }
    auto [h1, labels1] = max_ns_energy(1);
    CHECK(h1 == Rational(1 * 3 - 1, 4 * 3));
    CHECK(labels1.size() == 2);
}
