#include "svir/unitarity.hpp"

#include <cstdlib>
#include <stdexcept>

namespace svir {

bool ns_label_valid(const DiscreteLabel& lab) {
    return lab.n >= 0 && lab.l >= 0 && lab.l <= lab.n && (lab.l + lab.m) % 2 == 0 &&
           std::labs(lab.m) <= lab.l;
}

bool r_label_valid(const DiscreteLabel& lab) {
    return lab.n >= 0 && lab.l >= 0 && lab.l <= lab.n && (lab.l + lab.m + 1) % 2 == 0 &&
           std::labs(lab.m - 1) <= lab.l;
}

CHQ hq_ns(const DiscreteLabel& lab) {
    if (!ns_label_valid(lab))
        throw std::domain_error("invalid NS discrete label " + lab.str() + " at n=" +
                                std::to_string(lab.n));
    Rational den(4 * (lab.n + 2));
    return {discrete_c(lab.n), Rational(lab.l * (lab.l + 2) - lab.m * lab.m) / den,
            Rational(-lab.m, lab.n + 2)};
}

CHQ hq_r(const DiscreteLabel& lab) {
    if (!r_label_valid(lab))
        throw std::domain_error("invalid R discrete label " + lab.str() + " at n=" +
                                std::to_string(lab.n));
    Rational den(4 * (lab.n + 2));
    return {discrete_c(lab.n),
            Rational(lab.l * (lab.l + 2) - lab.m * lab.m) / den + Rational(1, 8),
            Rational(-lab.m, lab.n + 2) + Rational(1, 2)};
}

std::vector<DiscreteLabel> enumerate_labels(long n, SectorType type) {
    if (n < 0)
        throw std::domain_error("enumerate_labels: n must be >= 0");
    std::vector<DiscreteLabel> out;
    for (long l = 0; l <= n; ++l)
        for (long m = -l - 2; m <= l + 2; ++m) {
            DiscreteLabel lab{n, l, m};
            if (type == SectorType::NS ? ns_label_valid(lab) : r_label_valid(lab))
                out.push_back(lab);
        }
    return out;
}

const char* region_tag(Region r) {
    switch (r) {
        case Region::NS1: return "NS1";
        case Region::NS2: return "NS2";
        case Region::NS3: return "NS3";
        case Region::R1: return "R1";
        case Region::R2: return "R2";
        case Region::R3: return "R3";
        case Region::None: return "none";
    }
    return "none";
}

namespace {

// The quadratic 2h - 2n*qeff + (c/3-1)(n^2 - 1/4) + shift appearing in the
// c >= 3 conditions, with qeff = q (NS) or q - 1/2 (R) and shift = 0 / -1/4.
struct LatticeQuadratic {
    Rational lead;  // c/3 - 1
    Rational qeff;
    Rational h2;    // 2h + shift - lead/4
    Rational at(const Rational& n) const { return lead * n * n - 2 * (qeff * n) + h2; }
};

// Universal nonnegativity over the lattice off + Z, decided at the two points
// adjacent to the parabola vertex (lead = 0 degenerates to a line).
bool lattice_nonneg(const LatticeQuadratic& f, const Rational& off) {
    if (f.lead.is_zero())
        return f.qeff.is_zero() && f.h2 >= Rational(0);
    Rational vertex = f.qeff / f.lead;
    Rational lower = (vertex - off).floor() + off;
    return f.at(lower) >= Rational(0) && f.at(lower + Rational(1)) >= Rational(0);
}

// Roots of f on the lattice off + Z.
std::vector<Rational> lattice_roots(const LatticeQuadratic& f, const Rational& off) {
    std::vector<Rational> out;
    if (f.lead.is_zero()) {
        if (f.qeff.is_zero())
            return out;
        Rational root = f.h2 / (Rational(2) * f.qeff);
        if ((root - off).is_integer())
            out.push_back(root);
        return out;
    }
    Rational disc = f.qeff * f.qeff - f.lead * f.h2;
    if (disc.sgn() < 0)
        return out;
    auto sq = Rational::exact_sqrt(disc);
    if (!sq)
        return out;
    for (int s : {-1, 1}) {
        Rational root = (f.qeff + Rational(s) * *sq) / f.lead;
        if ((root - off).is_integer())
            if (out.empty() || out.back() != root)
                out.push_back(root);
    }
    return out;
}

std::vector<DiscreteLabel> match_discrete(SectorType type, const Rational& c, const Rational& h,
                                          const Rational& q) {
    std::vector<DiscreteLabel> out;
    // c = 3n/(n+2) <=> n = 2c/(3-c)
    if (c >= Rational(3))
        return out;
    Rational n_rat = Rational(2) * c / (Rational(3) - c);
    if (!n_rat.is_integer() || n_rat.sgn() < 0)
        return out;
    long n = n_rat.to_long();
    for (const auto& lab : enumerate_labels(n, type)) {
        CHQ w = type == SectorType::NS ? hq_ns(lab) : hq_r(lab);
        if (w.h == h && w.q == q)
            out.push_back(lab);
    }
    return out;
}

} // namespace

RegionResult region_check(SectorType type, const Rational& c, const Rational& h,
                          const Rational& q) {
    RegionResult res;
    auto discrete = match_discrete(type, c, h, q);
    if (!discrete.empty()) {
        res.region = type == SectorType::NS ? Region::NS3 : Region::R3;
        res.labels = std::move(discrete);
        res.sufficient = true;
        return res;
    }
    if (c < Rational(3))
        return res;

    bool ns = type == SectorType::NS;
    Rational lead = c * Rational(1, 3) - Rational(1);
    Rational qeff = ns ? q : q - Rational(1, 2);
    Rational shift = ns ? Rational(0) : Rational(-1, 4);
    LatticeQuadratic f{lead, qeff, Rational(2) * h + shift - lead * Rational(1, 4)};
    Rational off = ns ? Rational(1, 2) : Rational(0);

    if (lattice_nonneg(f, off)) {
        res.region = ns ? Region::NS1 : Region::R1;
        res.sufficient = true;
        return res;
    }

    // The boundary condition: f vanishes at a lattice point and dips negative
    // one step outward, plus the supplementary inequality.
    Rational aux = ns ? Rational(2) * lead * h - q * q + c * Rational(1, 3)
                      : Rational(2) * lead * (h - c * Rational(1, 24)) - qeff * qeff +
                            c * Rational(1, 3);
    if (aux >= Rational(0)) {
        for (const auto& root : lattice_roots(f, off)) {
            Rational sgn_at = ns ? root : root - Rational(1, 2);
            Rational step = sgn_at.sgn() >= 0 ? Rational(1) : Rational(-1);
            if (f.at(root + step) < Rational(0)) {
                res.region = ns ? Region::NS2 : Region::R2;
                res.sufficient = false;
                return res;
            }
        }
    }
    return res;
}

std::pair<Rational, std::vector<DiscreteLabel>> max_ns_energy(long n) {
    Rational best(0);
    std::vector<DiscreteLabel> at;
    for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
        Rational h = hq_ns(lab).h;
        if (at.empty() || h > best) {
            best = h;
            at = {lab};
        } else if (h == best) {
            at.push_back(lab);
        }
    }
    return {best, at};
}

} // namespace svir
