#include "svir/fusion.hpp"

#include <cmath>
#include <stdexcept>

namespace svir {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

void check_level(long n) {
    if (n < 1)
        throw std::domain_error("coset sectors require n >= 1");
}

void check_same_level(long a, long b) {
    if (a != b)
        throw std::domain_error("sectors live at different levels n=" + std::to_string(a) +
                                " and n=" + std::to_string(b));
}

} // namespace

CosetSector canonical(long n, long l, long m, long s) {
    check_level(n);
    if (l < 0 || l > n)
        throw std::domain_error("sector label l out of range 0.." + std::to_string(n));
    m = mod(m, 2 * n + 4);
    s = mod(s, 4);
    if (mod(l - m + s, 2) != 0)
        throw std::domain_error("sector label (" + std::to_string(l) + "," + std::to_string(m) +
                                "," + std::to_string(s) + ") violates l-m+s parity");
    CosetSector a{n, l, m, s};
    CosetSector b{n, n - l, mod(m + n + 2, 2 * n + 4), mod(s + 2, 4)};
    return b < a ? b : a;
}

NSFermiSector canonical_ns(long n, long l, long m) {
    check_level(n);
    if (l < 0 || l > n)
        throw std::domain_error("sector label l out of range 0.." + std::to_string(n));
    m = mod(m, 2 * n + 4);
    if (mod(l - m, 2) != 0)
        throw std::domain_error("NS sector label (" + std::to_string(l) + "," +
                                std::to_string(m) + ") violates l-m parity");
    NSFermiSector a{n, l, m};
    NSFermiSector b{n, n - l, mod(m + n + 2, 2 * n + 4)};
    return b < a ? b : a;
}

CosetSector sector_identity(long n) { return canonical(n, 0, 0, 0); }
NSFermiSector ns_identity(long n) { return canonical_ns(n, 0, 0); }
CosetSector conjugate(const CosetSector& x) { return canonical(x.n, x.l, -x.m, -x.s); }

namespace {

std::vector<long> parse_components(const std::string& text, long& n, std::size_t expected) {
    std::string body = text;
    auto at = text.find('@');
    if (at != std::string::npos) {
        body = text.substr(0, at);
        n = std::stol(text.substr(at + 1));
    }
    std::vector<long> comps;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (piece.empty())
            throw std::invalid_argument("malformed sector '" + text + "'");
        comps.push_back(std::stol(piece));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (comps.size() != expected)
        throw std::invalid_argument("sector '" + text + "' needs " + std::to_string(expected) +
                                    " components");
    if (n < 1)
        throw std::invalid_argument("sector '" + text + "' carries no level; pass n");
    return comps;
}

} // namespace

CosetSector parse_sector(const std::string& text, long n) {
    auto c = parse_components(text, n, 3);
    return canonical(n, c[0], c[1], c[2]);
}

NSFermiSector parse_ns_sector(const std::string& text, long n) {
    auto c = parse_components(text, n, 2);
    return canonical_ns(n, c[0], c[1]);
}

FusionVector fuse(const CosetSector& a, const CosetSector& b) {
    check_same_level(a.n, b.n);
    FusionVector out;
    long lmax = std::min(a.l + b.l, 2 * a.n - a.l - b.l);
    for (long l = std::labs(a.l - b.l); l <= lmax; l += 2)
        out[canonical(a.n, l, a.m + b.m, a.s + b.s)] += 1;
    return out;
}

NSFusionVector fuse_ns(const NSFermiSector& a, const NSFermiSector& b) {
    check_same_level(a.n, b.n);
    NSFusionVector out;
    long lmax = std::min(a.l + b.l, 2 * a.n - a.l - b.l);
    for (long l = std::labs(a.l - b.l); l <= lmax; l += 2)
        out[canonical_ns(a.n, l, a.m + b.m)] += 1;
    return out;
}

FusionVector fuse(const FusionVector& x, const FusionVector& y) {
    FusionVector out;
    for (const auto& [a, ka] : x)
        for (const auto& [b, kb] : y)
            for (const auto& [c, kc] : fuse(a, b))
                out[c] += ka * kb * kc;
    return out;
}

NSFusionVector fuse(const NSFusionVector& x, const NSFusionVector& y) {
    NSFusionVector out;
    for (const auto& [a, ka] : x)
        for (const auto& [b, kb] : y)
            for (const auto& [c, kc] : fuse_ns(a, b))
                out[c] += ka * kb * kc;
    return out;
}

Phase statistics_phase(const CosetSector& x) {
    Rational expnt = Rational(x.l * (x.l + 2) - x.m * x.m, 4 * (x.n + 2)) +
                     Rational(x.s * x.s, 8);
    return Phase::from_exponent(expnt);
}

bool is_dim_one(const CosetSector& x) { return x.l == 0 || x.l == x.n; }

double quantum_dimension_float(const CosetSector& x) {
    double pi = std::acos(-1.0);
    return std::sin((x.l + 1) * pi / (x.n + 2)) / std::sin(pi / (x.n + 2));
}

FusionVector sector_power(const CosetSector& x, long k) {
    if (k < 0)
        throw std::domain_error("sector_power: negative exponent");
    FusionVector acc{{sector_identity(x.n), 1}};
    for (long i = 0; i < k; ++i)
        acc = fuse(acc, FusionVector{{x, 1}});
    return acc;
}

NSFusionVector sector_power_ns(const NSFermiSector& x, long k) {
    if (k < 0)
        throw std::domain_error("sector_power_ns: negative exponent");
    NSFusionVector acc{{ns_identity(x.n), 1}};
    for (long i = 0; i < k; ++i)
        acc = fuse(acc, NSFusionVector{{x, 1}});
    return acc;
}

long order_of(const CosetSector& x) {
    if (!is_dim_one(x))
        throw std::domain_error("order_of: sector " + x.str() + " is not invertible");
    CosetSector id = sector_identity(x.n);
    CosetSector acc = id;
    long bound = 4 * (4 * x.n + 8);
    for (long k = 1; k <= bound; ++k) {
        FusionVector prod = fuse(acc, x);
        if (prod.size() != 1 || prod.begin()->second != 1)
            throw std::logic_error("order_of: product of invertible sectors is not a sector");
        acc = prod.begin()->first;
        if (acc == id)
            return k;
    }
    throw std::logic_error("order_of: no finite order found");
}

std::vector<CosetSector> all_sectors(long n) {
    check_level(n);
    std::vector<CosetSector> out;
    for (long l = 0; l <= n; ++l)
        for (long m = 0; m < 2 * n + 4; ++m)
            for (long s = 0; s < 4; ++s) {
                if (mod(l - m + s, 2) != 0)
                    continue;
                CosetSector canon = canonical(n, l, m, s);
                if (canon == CosetSector{n, l, m, s})
                    out.push_back(canon);
            }
    return out;
}

std::vector<NSFermiSector> all_ns_sectors(long n) {
    check_level(n);
    std::vector<NSFermiSector> out;
    for (long l = 0; l <= n; ++l)
        for (long m = 0; m < 2 * n + 4; ++m) {
            if (mod(l - m, 2) != 0)
                continue;
            NSFermiSector canon = canonical_ns(n, l, m);
            if (canon == NSFermiSector{n, l, m})
                out.push_back(canon);
        }
    return out;
}

} // namespace svir
