#include "svir/fusion.hpp"

#include <doctest.h>

using namespace svir;

TEST_CASE("canonicalization under the sector identification") {
    CHECK(canonical(2, 2, 4, 2) == canonical(2, 0, 0, 0));
    CHECK(canonical(10, 10, 12, 2) == canonical(10, 0, 0, 0));
    CHECK(canonical(3, 0, 0, 0) == CosetSector{3, 0, 0, 0});
    CHECK(canonical(5, 2, -3, 1) == canonical(5, 2, 2 * 5 + 4 - 3, 1));
    // idempotent
    CosetSector x = canonical(7, 3, 5, 2);
    CHECK(canonical(x.n, x.l, x.m, x.s) == x);
    CHECK_THROWS_AS(canonical(3, 1, 0, 0), std::domain_error); // parity
    CHECK_THROWS_AS(canonical(3, 4, 0, 0), std::domain_error); // l out of range
    CHECK_THROWS_AS(canonical(0, 0, 0, 0), std::domain_error); // n >= 1

    CHECK(canonical_ns(4, 4, 10) == canonical_ns(4, 0, 4));
    CHECK(parse_sector("1,1,0@2") == canonical(2, 1, 1, 0));
    CHECK(parse_sector("1,1,0", 2) == canonical(2, 1, 1, 0));
    CHECK_THROWS_AS(parse_sector("1,1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sector("1,1@2"), std::invalid_argument);
}

TEST_CASE("coset fusion rules") {
    // identity
    CosetSector id = sector_identity(4);
    CosetSector x = canonical(4, 2, 2, 0);
    CHECK(fuse(id, x) == FusionVector{{x, 1}});

    // n=2: (1,1,0) x (1,1,0) = (0,2,0) + (2,2,0)
    FusionVector got = fuse(canonical(2, 1, 1, 0), canonical(2, 1, 1, 0));
    FusionVector want{{canonical(2, 0, 2, 0), 1}, {canonical(2, 2, 2, 0), 1}};
    CHECK(got == want);

    // n=1: the SU(2)_1 truncation collapses the range to l=0
    FusionVector got1 = fuse(canonical(1, 1, 1, 0), canonical(1, 1, 1, 0));
    CHECK(got1 == FusionVector{{canonical(1, 0, 2, 0), 1}});

    CHECK_THROWS_AS(fuse(canonical(2, 0, 0, 0), canonical(3, 0, 0, 0)), std::domain_error);
}

TEST_CASE("fermionic fusion rules") {
    NSFermiSector id = ns_identity(3);
    NSFermiSector y = canonical_ns(3, 1, 1);
    CHECK(fuse_ns(id, y) == NSFusionVector{{y, 1}});

    // (n,-n)^2 = (0,-2n)
    for (long n : {2L, 5L, 9L}) {
        NSFusionVector sq = fuse_ns(canonical_ns(n, n, -n), canonical_ns(n, n, -n));
        CHECK(sq == NSFusionVector{{canonical_ns(n, 0, -2 * n), 1}});
    }

    // n=2: (1,1) x (1,-1) = (0,0) + (2,0)
    NSFusionVector got = fuse_ns(canonical_ns(2, 1, 1), canonical_ns(2, 1, -1));
    NSFusionVector want{{canonical_ns(2, 0, 0), 1}, {canonical_ns(2, 2, 0), 1}};
    CHECK(got == want);
}

TEST_CASE("statistics phases and dimensions") {
    CHECK(statistics_phase(sector_identity(6)).is_one());
    for (long n = 1; n <= 12; ++n)
        CHECK(statistics_phase(canonical(n, n, n + 2, 0)).is_minus_one());
    // (6,4,0) at n=6 has phase 1
    CHECK(statistics_phase(canonical(6, 6, 4, 0)).is_one());

    CHECK(is_dim_one(canonical(6, 0, 2, 0)));
    CHECK(is_dim_one(canonical(6, 6, 0, 0)));
    CHECK(!is_dim_one(canonical(6, 3, 1, 0)));
    // n=2, l=1: quantum dimension sqrt(2)
    CHECK(quantum_dimension_float(canonical(2, 1, 1, 0)) == doctest::Approx(1.41421356).epsilon(1e-6));
}

TEST_CASE("orders of invertible sectors") {
    for (long n : {2L, 4L, 6L, 10L})
        CHECK(order_of(canonical(n, 0, 1, 1)) == 2 * n + 4);
    for (long n : {1L, 3L, 5L, 9L})
        CHECK(order_of(canonical(n, 0, 1, 1)) == 4 * n + 8);
    for (long n : {2L, 3L, 8L})
        CHECK(order_of(canonical(n, n, n + 2, 0)) == 2);
    CHECK_THROWS_AS(order_of(canonical(2, 1, 1, 0)), std::domain_error);
}

TEST_CASE("sector counts") {
    for (long n : {1L, 2L, 5L})
        CHECK(all_sectors(n).size() == static_cast<std::size_t>((n + 1) * (2 * n + 4)));
    for (long n : {1L, 2L, 6L})
        CHECK(all_ns_sectors(n).size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
}
