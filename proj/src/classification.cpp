#include "svir/classification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace svir {

namespace {

CosetSector mul(const CosetSector& a, const CosetSector& b) {
    FusionVector prod = fuse(a, b);
    if (prod.size() != 1 || prod.begin()->second != 1)
        throw std::logic_error("dimension-1 sector product is not a single sector");
    return prod.begin()->first;
}

std::set<CosetSector> close_under_fusion(long n, const std::vector<CosetSector>& gens) {
    std::set<CosetSector> elems{sector_identity(n)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<CosetSector> snapshot(elems.begin(), elems.end());
        for (const auto& x : snapshot)
            for (const auto& g : gens) {
                CosetSector y = mul(x, g);
                if (elems.insert(y).second)
                    grew = true;
            }
    }
    return elems;
}

std::vector<long> abelian_invariant_factors(long n, const std::set<CosetSector>& elems) {
    // Rank <= 2 here, so the shape is [exponent] or [exponent, order/exponent].
    long expo = 1;
    for (const auto& x : elems)
        expo = std::lcm(expo, order_of(x));
    long ord = static_cast<long>(elems.size());
    if (expo == ord)
        return {ord};
    return {expo, ord / expo};
}

SimpleCurrentGroup make_group(long n, const std::set<CosetSector>& elems,
                              std::optional<CosetSector> gen_hint = std::nullopt) {
    SimpleCurrentGroup g;
    g.n = n;
    g.elements.assign(elems.begin(), elems.end());
    g.invariant_factors = abelian_invariant_factors(n, elems);
    if (g.invariant_factors.size() == 1) {
        if (gen_hint && order_of(*gen_hint) == g.order()) {
            g.generator = gen_hint;
        } else {
            for (const auto& x : g.elements)
                if (order_of(x) == g.order()) {
                    g.generator = x;
                    break;
                }
        }
    }
    return g;
}

} // namespace

bool SimpleCurrentGroup::contains(const CosetSector& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Dim1Group dim1_group(long n) {
    Dim1Group g;
    g.n = n;
    for (const auto& x : all_sectors(n))
        if (is_dim_one(x))
            g.elements.push_back(x);
    std::sort(g.elements.begin(), g.elements.end());
    g.sigma = canonical(n, 0, 1, 1);
    if (n % 2 == 0)
        g.tau = (n % 4 == 2) ? canonical(n, n, 0, 0) : canonical(n, 0, n + 2, 0);
    std::set<CosetSector> elems(g.elements.begin(), g.elements.end());
    g.invariant_factors = abelian_invariant_factors(n, elems);
    return g;
}

std::vector<CosetSector> phase_one_dim1_sectors(long n) {
    std::vector<CosetSector> out;
    for (const auto& x : all_sectors(n))
        if (is_dim_one(x) && statistics_phase(x).is_one())
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

SimpleCurrentGroup generated_subgroup(long n, const std::vector<CosetSector>& gens) {
    auto elems = close_under_fusion(n, gens);
    std::optional<CosetSector> hint;
    if (gens.size() == 1)
        hint = gens[0];
    return make_group(n, elems, hint);
}

std::vector<SimpleCurrentGroup> phase_one_maximal_subgroups(long n) {
    auto p1 = phase_one_dim1_sectors(n);
    std::set<CosetSector> p1set(p1.begin(), p1.end());

    // Every subgroup of the rank <= 2 ambient group has <= 2 generators, so
    // closing each pair of phase-1 elements finds every phase-1 subgroup.
    std::set<std::set<CosetSector>> groups;
    for (std::size_t i = 0; i < p1.size(); ++i)
        for (std::size_t j = i; j < p1.size(); ++j) {
            auto elems = close_under_fusion(n, {p1[i], p1[j]});
            bool all_phase_one = std::all_of(elems.begin(), elems.end(), [&](const auto& x) {
                return p1set.count(x) > 0;
            });
            if (all_phase_one)
                groups.insert(std::move(elems));
        }

    std::vector<SimpleCurrentGroup> maximal;
    for (const auto& g : groups) {
        bool dominated = std::any_of(groups.begin(), groups.end(), [&](const auto& h) {
            return h.size() > g.size() && std::includes(h.begin(), h.end(), g.begin(), g.end());
        });
        if (!dominated)
            maximal.push_back(make_group(n, g));
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const auto& a, const auto& b) { return a.elements < b.elements; });
    return maximal;
}

CasePrediction case_formula_prediction(long n) {
    if (n < 1)
        throw std::domain_error("case_formula_prediction: n must be >= 1");
    CasePrediction pred;

    if (n % 2 == 1) {
        // [A] smallest k (automatically even) with phase(sigma^k) = 1; the
        // maximal group is generated by sigma^k.
        pred.case_tag = CaseTag::A;
        long k = 1;
        while (!statistics_phase(canonical(n, 0, k, k)).is_one())
            ++k;
        pred.k = k;
        pred.groups = {generated_subgroup(n, {canonical(n, 0, k, k)})};
        return pred;
    }

    if (n % 4 == 2) {
        // [B] smallest even k with phase((0,k,0)) = 1; the branch depends on
        // the phase of (0,k/2,0).
        pred.case_tag = CaseTag::B;
        long k = 2;
        while (!statistics_phase(canonical(n, 0, k, 0)).is_one())
            k += 2;
        pred.k = k;
        Phase half = Phase::from_exponent(Rational(-(k / 2) * (k / 2), 4 * (n + 2)));
        pred.case_b_half_phase = half;
        if (half.is_minus_one())
            pred.groups = {generated_subgroup(n, {canonical(n, n, k / 2, 0)})};
        else
            pred.groups = {generated_subgroup(n, {canonical(n, 0, k, 0)})};
        return pred;
    }

    if (n % 16 != 0) {
        // [C] n = 4, 8, 12 mod 16: the group joins (0,k,0) with (n,0,0).
        pred.case_tag = CaseTag::C;
        long k = 2;
        while (!statistics_phase(canonical(n, 0, k, 0)).is_one())
            k += 2;
        pred.k = k;
        pred.groups = {generated_subgroup(n, {canonical(n, 0, k, 0), canonical(n, n, 0, 0)})};
        return pred;
    }

    // [D] n = 0 mod 16: two maximal groups, generated by sigma^k and by
    // sigma^k tau with tau = (0,n+2,0).
    pred.case_tag = CaseTag::D;
    long k = 1;
    while (!statistics_phase(canonical(n, 0, k, k)).is_one())
        ++k;
    pred.k = k;
    CosetSector sk = canonical(n, 0, k, k);
    CosetSector sk_tau = mul(sk, canonical(n, 0, n + 2, 0));
    pred.groups = {generated_subgroup(n, {sk}), generated_subgroup(n, {sk_tau})};
    std::sort(pred.groups.begin(), pred.groups.end(),
              [](const auto& a, const auto& b) { return a.elements < b.elements; });
    return pred;
}

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::A: return "A";
        case CaseTag::B: return "B";
        case CaseTag::C: return "C";
        case CaseTag::D: return "D";
    }
    return "?";
}

const char* extension_kind_tag(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::SimpleCurrent: return "simple_current";
        case ExtensionKind::ConformalEmbedding: return "conformal_embedding";
        case ExtensionKind::Mirror: return "mirror";
        case ExtensionKind::Combined: return "combined";
    }
    return "?";
}

FusionVector ExtensionRecord::dual_canonical_endomorphism() const {
    FusionVector out;
    for (const auto& x : sectors)
        out[x] += 1;
    return out;
}

std::vector<ExtensionRecord> exceptional_catalog() {
    std::vector<ExtensionRecord> out;
    auto rec = [](long n, ExtensionKind kind, std::vector<CosetSector> sectors,
                  std::string prov) {
        std::sort(sectors.begin(), sectors.end());
        return ExtensionRecord{n, kind, std::move(sectors), std::nullopt, std::move(prov)};
    };
    out.push_back(rec(10, ExtensionKind::ConformalEmbedding,
                      {canonical(10, 0, 0, 0), canonical(10, 6, 0, 0)},
                      "n=10: (0,0,0)+(6,0,0), conformal embedding SU(2)_10 in SO(5)_1"));
    out.push_back(rec(10, ExtensionKind::ConformalEmbedding,
                      {canonical(10, 0, 0, 0), canonical(10, 0, 12, 0)},
                      "n=10: (0,0,0)+(0,12,0), conformal embedding U(1)_12 in U(1)_3, "
                      "Z/2 crossed product"));
    out.push_back(rec(10, ExtensionKind::Combined,
                      {canonical(10, 0, 0, 0), canonical(10, 6, 0, 0), canonical(10, 0, 12, 0),
                       canonical(10, 6, 12, 0)},
                      "n=10: (0,0,0)+(6,0,0)+(0,12,0)+(6,12,0), combination of the two n=10 "
                      "embeddings"));
    out.push_back(rec(28, ExtensionKind::ConformalEmbedding,
                      {canonical(28, 0, 0, 0), canonical(28, 10, 0, 0), canonical(28, 18, 0, 0),
                       canonical(28, 28, 0, 0)},
                      "n=28: (0,0,0)+(10,0,0)+(18,0,0)+(28,0,0), conformal embedding "
                      "SU(2)_28 in (G_2)_1"));
    return out;
}

namespace {

// All subgroups of a (rank <= 2) group of sectors, via pairwise joins.
std::vector<std::set<CosetSector>> all_subgroups(long n, const std::vector<CosetSector>& elems) {
    std::set<std::set<CosetSector>> out;
    out.insert({sector_identity(n)});
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            out.insert(close_under_fusion(n, {elems[i], elems[j]}));
    return {out.begin(), out.end()};
}

} // namespace

std::vector<ExtensionRecord> classify(long n) {
    if (n < 1)
        throw std::domain_error("classify: n must be >= 1");
    std::vector<ExtensionRecord> records;
    std::set<std::vector<CosetSector>> seen;

    // Exceptional entries take precedence over coinciding simple-current sets.
    for (const auto& exc : exceptional_catalog())
        if (exc.n == n) {
            records.push_back(exc);
            seen.insert(exc.sectors);
        }

    auto maximal = phase_one_maximal_subgroups(n);
    for (const auto& mx : maximal) {
        for (auto& sub : all_subgroups(n, mx.elements)) {
            std::vector<CosetSector> sectors(sub.begin(), sub.end());
            if (!seen.insert(sectors).second)
                continue;
            SimpleCurrentGroup grp = make_group(n, sub);
            ExtensionRecord rec;
            rec.n = n;
            rec.kind = ExtensionKind::SimpleCurrent;
            rec.sectors = std::move(sectors);
            rec.generator = grp.generator;
            rec.provenance = "simple current extension by a subgroup of order " +
                             std::to_string(grp.order()) +
                             (grp.generator ? " generated by " + grp.generator->str() : "");
            records.push_back(std::move(rec));
        }
    }

    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.sectors.size() != b.sectors.size())
            return a.sectors.size() < b.sectors.size();
        return a.sectors < b.sectors;
    });
    return records;
}

} // namespace svir
