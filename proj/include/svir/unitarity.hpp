#pragma once

#include "svir/module.hpp"
#include "svir/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svir {

// Discrete-series label at c = 3n/(n+2). NS: l+m even, |m| <= l.
// R: l+m+1 even, |m-1| <= l.
struct DiscreteLabel {
    long n = 0;
    long l = 0;
    long m = 0;

    friend bool operator==(const DiscreteLabel&, const DiscreteLabel&) = default;
    friend std::strong_ordering operator<=>(const DiscreteLabel&, const DiscreteLabel&) = default;
    std::string str() const { return "(" + std::to_string(l) + "," + std::to_string(m) + ")"; }
};

struct CHQ {
    Rational c, h, q;
};

inline Rational discrete_c(long n) { return Rational(3 * n, n + 2); }

bool ns_label_valid(const DiscreteLabel& lab);
bool r_label_valid(const DiscreteLabel& lab);

// c = 3n/(n+2), h = (l(l+2)-m^2)/(4(n+2)), q = -m/(n+2); the R case adds 1/8
// to h and 1/2 to q.
CHQ hq_ns(const DiscreteLabel& lab);
CHQ hq_r(const DiscreteLabel& lab);

std::vector<DiscreteLabel> enumerate_labels(long n, SectorType type);

enum class Region { NS1, NS2, NS3, R1, R2, R3, None };

const char* region_tag(Region r);

struct RegionResult {
    Region region = Region::None;
    // Populated for NS3/R3: every discrete label with these exact weights.
    std::vector<DiscreteLabel> labels;
    // NS1/NS3/R1/R3 are necessary and sufficient; NS2/R2 are necessary
    // conditions at c >= 3 and sufficiency is not asserted.
    bool sufficient = false;
};

RegionResult region_check(SectorType type, const Rational& c, const Rational& h,
                          const Rational& q);

// Largest lowest energy among the NS labels at level n, with its labels.
std::pair<Rational, std::vector<DiscreteLabel>> max_ns_energy(long n);

} // namespace svir
