#include "svir/chiral.hpp"

#include <algorithm>
#include <stdexcept>

namespace svir {

bool is_chiral(const Rational& c, const Rational& h, const Rational& q) {
    (void)c;
    return h == q * Rational(1, 2);
}

bool is_antichiral(const Rational& c, const Rational& h, const Rational& q) {
    (void)c;
    return h == -(q * Rational(1, 2));
}

ChiralRingElement chiral_product(const ChiralRingElement& x, const ChiralRingElement& y, long n) {
    ChiralRingElement out;
    for (const auto& [l1, k1] : x)
        for (const auto& [l2, k2] : y) {
            if (l1 < 0 || l1 > n || l2 < 0 || l2 > n)
                throw std::domain_error("chiral_product: label outside 0..n");
            if (l1 + l2 > n)
                continue;
            out[l1 + l2] += k1 * k2;
            if (out[l1 + l2] == 0)
                out.erase(l1 + l2);
        }
    return out;
}

std::vector<DiscreteLabel> chiral_labels(long n) {
    std::vector<DiscreteLabel> out;
    for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
        CHQ w = hq_ns(lab);
        if (is_chiral(w.c, w.h, w.q))
            out.push_back(lab);
    }
    return out;
}

std::vector<DiscreteLabel> ramond_vacuum_sectors(long n) {
    std::vector<DiscreteLabel> out;
    Rational c24 = discrete_c(n) * Rational(1, 24);
    for (const auto& lab : enumerate_labels(n, SectorType::R))
        if (hq_r(lab).h == c24)
            out.push_back(lab);
    return out;
}

std::pair<Rational, Rational> flow_lowest_vector(const Rational& c, const Rational& h,
                                                 const Rational& q, const Rational& t) {
    return {h + t * q + c * Rational(1, 6) * t * t, q + c * Rational(1, 3) * t};
}

DiscreteLabel flow_discrete_label(long n, const DiscreteLabel& label, SectorType source,
                                  const Rational& t, const Rational& cutoff) {
    if (t != Rational(1, 2) && t != Rational(-1, 2))
        throw std::domain_error("flow_discrete_label: t must be +-1/2");
    CHQ w = source == SectorType::NS ? hq_ns(label) : hq_r(label);
    HighestWeight hw{w.c, w.h, w.q, source};
    ModuleHandle mod(hw, cutoff);

    // Flowed grading operators on the same state space:
    // L'_0 = L_0 + t J_0 + (c/6) t^2, J'_0 = J_0 + (c/3) t.
    Rational c6t2 = w.c * Rational(1, 6) * t * t;
    std::optional<Rational> min_energy;
    std::map<Rational, std::size_t> charges_at_min; // surviving charge -> rank
    for (const auto& [key, basis] : mod.blocks()) {
        std::size_t rank = mat_rank(mod.gram(key));
        if (rank == 0)
            continue;
        Rational energy = w.h + key.level + t * key.charge + c6t2;
        if (!min_energy || energy < *min_energy) {
            min_energy = energy;
            charges_at_min.clear();
        }
        if (energy == *min_energy)
            charges_at_min[key.charge] += rank;
    }
    if (!min_energy)
        throw std::logic_error("flow oracle: module has no surviving states");

    SectorType target = source == SectorType::NS ? SectorType::R : SectorType::NS;
    Rational h_new = *min_energy;
    Rational q_shift = w.c * Rational(1, 3) * t;
    Rational q_new;
    if (charges_at_min.size() == 1 && charges_at_min.begin()->second == 1) {
        q_new = charges_at_min.begin()->first + q_shift;
    } else if (charges_at_min.size() == 2 && target == SectorType::R) {
        // Two-dimensional Ramond lowest space: the label charge belongs to
        // the higher of the two (adjacent) charges.
        auto lo = charges_at_min.begin();
        auto hi = std::next(lo);
        if (hi->first - lo->first != Rational(1) || lo->second != 1 || hi->second != 1)
            throw std::logic_error("flow oracle: unexpected lowest-space charges for " +
                                   label.str());
        q_new = hi->first + q_shift;
    } else {
        throw std::logic_error("flow oracle: unexpected lowest-space shape for " + label.str());
    }

    for (const auto& cand : enumerate_labels(n, target)) {
        CHQ v = target == SectorType::NS ? hq_ns(cand) : hq_r(cand);
        if (v.h == h_new && v.q == q_new)
            return cand;
    }
    throw std::logic_error("flow oracle: no discrete label matches (h,q)=(" + h_new.str() + "," +
                           q_new.str() + ") for source " + label.str());
}

long index_pairing(const DiscreteLabel& pi1, const DiscreteLabel& pi2, long n,
                   const Rational& cutoff) {
    if (pi1.n != n || pi2.n != n || !r_label_valid(pi1) || !r_label_valid(pi2))
        throw std::domain_error("index_pairing: invalid R labels for n=" + std::to_string(n));
    if (cutoff < Rational(1))
        throw std::domain_error("index_pairing: cutoff must be >= 1");
    if (!(pi1 == pi2))
        return 0; // evaluation of the characteristic projection vanishes

    CHQ w = hq_r(pi1);
    HighestWeight hw{w.c, w.h, w.q, SectorType::R};
    ModuleHandle mod(hw, cutoff);
    Rational c24 = w.c * Rational(1, 24);
    long even = 0, odd = 0;
    for (const auto& [key, basis] : mod.blocks()) {
        if (w.h + key.level != c24)
            continue;
        for (const auto& state : basis)
            (mod.grading_sign(state) > 0 ? even : odd) += 1;
    }
    return even - odd;
}

std::vector<std::vector<long>> index_pairing_matrix(long n, const Rational& cutoff) {
    auto rvac = ramond_vacuum_sectors(n);
    std::vector<std::vector<long>> out(rvac.size(), std::vector<long>(rvac.size(), 0));
    for (std::size_t i = 0; i < rvac.size(); ++i)
        for (std::size_t j = 0; j < rvac.size(); ++j)
            out[i][j] = index_pairing(rvac[i], rvac[j], n, cutoff);
    return out;
}

long index_via_supercharge_kernels(const DiscreteLabel& label, long n, const Rational& cutoff) {
    if (label.n != n || !r_label_valid(label))
        throw std::domain_error("index_via_supercharge_kernels: invalid R label");
    CHQ w = hq_r(label);
    HighestWeight hw{w.c, w.h, w.q, SectorType::R};
    ModuleHandle mod(hw, cutoff);
    long index = 0;
    for (Rational lv(0); lv <= cutoff; lv += Rational(1)) {
        auto basis = mod.level_basis(lv);
        if (basis.empty())
            continue;
        Mat q = mat_add(mod.zero_mode_matrix(ZeroMode::G0plus, lv),
                        mod.zero_mode_matrix(ZeroMode::G0minus, lv));
        // Split columns by parity; Q maps each parity subspace to the other.
        std::vector<std::size_t> even_idx, odd_idx;
        for (std::size_t i = 0; i < basis.size(); ++i)
            (mod.grading_sign(basis[i]) > 0 ? even_idx : odd_idx).push_back(i);
        auto restrict_cols = [&](const std::vector<std::size_t>& cols) {
            Mat r = mat_zero(basis.size(), cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < basis.size(); ++i)
                    r[i][j] = q[i][cols[j]];
            return r;
        };
        Mat q_even = restrict_cols(even_idx);
        Mat q_odd = restrict_cols(odd_idx);
        index += static_cast<long>(even_idx.size() - mat_rank(q_even));
        index -= static_cast<long>(odd_idx.size() - mat_rank(q_odd));
    }
    return index;
}

} // namespace svir
