#pragma once

#include "svir/rational.hpp"
#include "svir/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace svir {

// Coset sector (l,m,s) at level n: l in 0..n, m mod 2n+4, s mod 4,
// l-m+s even, canonical under the identification
// (l,m,s) = (n-l, m+n+2, s+2). Construct through canonical().
struct CosetSector {
    long n = 1;
    long l = 0;
    long m = 0;
    long s = 0;

    friend bool operator==(const CosetSector&, const CosetSector&) = default;
    friend std::strong_ordering operator<=>(const CosetSector&, const CosetSector&) = default;
    std::string str() const {
        return "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(s) + ")";
    }
};

// NS fermionic sector (l,m): l-m even, canonical under (l,m) = (n-l, m+n+2).
struct NSFermiSector {
    long n = 1;
    long l = 0;
    long m = 0;

    friend bool operator==(const NSFermiSector&, const NSFermiSector&) = default;
    friend std::strong_ordering operator<=>(const NSFermiSector&, const NSFermiSector&) = default;
    std::string str() const { return "(" + std::to_string(l) + "," + std::to_string(m) + ")"; }
};

using FusionVector = std::map<CosetSector, long>;
using NSFusionVector = std::map<NSFermiSector, long>;

CosetSector canonical(long n, long l, long m, long s);
NSFermiSector canonical_ns(long n, long l, long m);

CosetSector sector_identity(long n);
NSFermiSector ns_identity(long n);
CosetSector conjugate(const CosetSector& x);

// Parse "l,m,s" (optionally "l,m,s@n"); the NS form drops the s component.
CosetSector parse_sector(const std::string& text, long n = -1);
NSFermiSector parse_ns_sector(const std::string& text, long n = -1);

FusionVector fuse(const CosetSector& a, const CosetSector& b);
NSFusionVector fuse_ns(const NSFermiSector& a, const NSFermiSector& b);

FusionVector fuse(const FusionVector& a, const FusionVector& b);
NSFusionVector fuse(const NSFusionVector& a, const NSFusionVector& b);

// Univalence exp(2 pi i ((l(l+2)-m^2)/(4(n+2)) + s^2/8)).
Phase statistics_phase(const CosetSector& x);

// Exact predicate: dimension 1 iff l = 0 or l = n.
bool is_dim_one(const CosetSector& x);
// sin((l+1)pi/(n+2))/sin(pi/(n+2)), display only.
double quantum_dimension_float(const CosetSector& x);

FusionVector sector_power(const CosetSector& x, long k);
// Least k > 0 with x^k the identity; requires is_dim_one.
long order_of(const CosetSector& x);

NSFusionVector sector_power_ns(const NSFermiSector& x, long k);

std::vector<CosetSector> all_sectors(long n);
std::vector<NSFermiSector> all_ns_sectors(long n);

} // namespace svir
