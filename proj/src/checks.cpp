#include "svir/checks.hpp"

#include "svir/chiral.hpp"
#include "svir/classification.hpp"
#include "svir/exactla.hpp"
#include "svir/fusion.hpp"
#include "svir/module.hpp"
#include "svir/superalgebra.hpp"
#include "svir/unitarity.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace svir {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::string detail; // first mismatch; empty means pass
    std::string note;   // informational (e.g. recorded witness)
};

// Generator pool of SVir^{N=2,t} with |index| <= window, plus the central
// element.
std::vector<GeneratorId> generator_window(const Rational& t, long window) {
    std::vector<GeneratorId> out;
    out.push_back(gen_central());
    for (long k = -window; k <= window; ++k) {
        out.push_back(gen_L(Rational(k)));
        out.push_back(gen_J(Rational(k)));
    }
    auto fill_g = [&](Family fam, const Rational& offset) {
        // offset + Z intersected with [-window, window]
        Rational r = offset - (offset + Rational(window)).floor();
        for (; r <= Rational(window); r += Rational(1))
            if (r >= Rational(-window))
                out.push_back({fam, r});
    };
    fill_g(Family::Gplus, Rational(1, 2) - t);
    fill_g(Family::Gminus, Rational(1, 2) + t);
    return out;
}

std::string fmt_pair(const GeneratorId& a, const GeneratorId& b) {
    return a.str() + ", " + b.str();
}

// ---- C1 ----------------------------------------------------------------

void check_jacobi(Failure& f) {
    for (const Rational& t : {Rational(0), Rational(1, 2)}) {
        auto pool = generator_window(t, 4);
        for (const auto& a : pool)
            for (const auto& b : pool)
                for (const auto& c : pool) {
                    if (!jacobi_defect(a, b, c, t).is_zero()) {
                        f.detail = "jacobi defect at (" + a.str() + "," + b.str() + "," +
                                   c.str() + "), t=" + t.str();
                        return;
                    }
                }
    }
}

// ---- C2 ----------------------------------------------------------------

void check_flow(Failure& f) {
    const std::vector<Rational> ts = {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(2),
                                      Rational(5, 2)};
    for (const auto& t : ts) {
        for (const auto& g : generator_window(t, 4)) {
            if (!(flow_inverse_elem(t, flow(t, g)) == AlgebraElement(g))) {
                f.detail = "eta'_t(eta_t(" + g.str() + ")) != id at t=" + t.str();
                return;
            }
        }
        auto pool = generator_window(t, 3);
        for (const auto& a : pool)
            for (const auto& b : pool) {
                AlgebraElement lhs = bracket_elem(flow(t, a), flow(t, b), Rational(0));
                AlgebraElement rhs = flow_elem(t, bracket(a, b, t));
                if (!(lhs == rhs)) {
                    f.detail = "flow homomorphism fails at [" + fmt_pair(a, b) + "], t=" + t.str();
                    return;
                }
            }
    }
}

// ---- C3 ----------------------------------------------------------------

void check_unitarity_psd(Failure& f) {
    for (long n = 1; n <= 3; ++n) {
        for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
            CHQ w = hq_ns(lab);
            ModuleHandle mod({w.c, w.h, w.q, SectorType::NS}, Rational(2));
            if (auto bad = mod.first_non_psd_block()) {
                f.detail = "NS label " + lab.str() + " at n=" + std::to_string(n) +
                           " has non-PSD block at level " + bad->level.str();
                return;
            }
        }
        for (const auto& lab : enumerate_labels(n, SectorType::R)) {
            CHQ w = hq_r(lab);
            ModuleHandle mod({w.c, w.h, w.q, SectorType::R}, Rational(2));
            if (auto bad = mod.first_non_psd_block()) {
                f.detail = "R label " + lab.str() + " at n=" + std::to_string(n) +
                           " has non-PSD block at level " + bad->level.str();
                return;
            }
        }
    }
    // Perturbed off-series weight at c = c_1 = 1 must fail PSD by level 2.
    Rational h = Rational(1, 6) + Rational(1, 137);
    ModuleHandle mod({Rational(1), h, Rational(-1, 3), SectorType::NS}, Rational(2));
    auto bad = mod.first_non_psd_block();
    if (!bad) {
        f.detail = "perturbed weight (1, 1/6+1/137, -1/3) stayed PSD up to level 2";
        return;
    }
    f.note = "perturbed witness block: level " + bad->level.str() + ", charge " +
             bad->charge.str();
}

// ---- C4 ----------------------------------------------------------------

void check_vacuum_null(Failure& f) {
    ModuleHandle mod({Rational(1), Rational(0), Rational(0), SectorType::NS}, Rational(1));
    for (const auto& [energy, dim] : mod.character_coeffs()) {
        if (energy == Rational(1, 2) && dim != 0) {
            f.detail = "c=1 vacuum has dim " + std::to_string(dim) + " at energy 1/2";
            return;
        }
        if (energy == Rational(1) && dim != 1) {
            f.detail = "c=1 vacuum has dim " + std::to_string(dim) + " at energy 1";
            return;
        }
    }
}

// ---- C5 ----------------------------------------------------------------

void check_max_energy(Failure& f) {
    for (long n = 0; n <= 20; ++n) {
        auto [hmax, labels] = max_ns_energy(n);
        Rational expected = n % 2 == 0 ? Rational(n, 4)
                                       : Rational(n * (n + 2) - 1, 4 * (n + 2));
        std::vector<DiscreteLabel> expected_labels =
            n % 2 == 0 ? std::vector<DiscreteLabel>{{n, n, 0}}
                       : std::vector<DiscreteLabel>{{n, n, -1}, {n, n, 1}};
        std::sort(expected_labels.begin(), expected_labels.end());
        std::sort(labels.begin(), labels.end());
        if (hmax != expected || labels != expected_labels) {
            f.detail = "n=" + std::to_string(n) + ": max h = " + hmax.str() + ", expected " +
                       expected.str();
            return;
        }
    }
}

// ---- C6 ----------------------------------------------------------------

// Fusion applied to raw (not canonicalized) representatives.
FusionVector raw_fuse(long n, long l1, long m1, long s1, long l2, long m2, long s2) {
    FusionVector out;
    long lmax = std::min(l1 + l2, 2 * n - l1 - l2);
    for (long l = std::labs(l1 - l2); l <= lmax; l += 2)
        out[canonical(n, l, m1 + m2, s1 + s2)] += 1;
    return out;
}

void check_fusion_ring(Failure& f) {
    for (long n = 1; n <= 5; ++n) {
        auto sectors = all_sectors(n);
        for (const auto& a : sectors)
            for (const auto& b : sectors) {
                if (fuse(a, b) != fuse(b, a)) {
                    f.detail = "commutativity fails at n=" + std::to_string(n) + ": " + a.str() +
                               " x " + b.str();
                    return;
                }
            }
        for (const auto& a : sectors)
            for (const auto& b : sectors) {
                FusionVector ab = fuse(a, b);
                for (const auto& c : sectors) {
                    FusionVector left = fuse(ab, FusionVector{{c, 1}});
                    FusionVector right = fuse(FusionVector{{a, 1}}, fuse(b, c));
                    if (left != right) {
                        f.detail = "associativity fails at n=" + std::to_string(n) + ": (" +
                                   a.str() + " x " + b.str() + ") x " + c.str();
                        return;
                    }
                }
            }
    }
    // Identification invariance of the phase and of fusion, n <= 10.
    for (long n = 1; n <= 10; ++n) {
        long period = 2 * n + 4;
        auto sectors = all_sectors(n);
        for (const auto& x : sectors) {
            Rational e1 = Rational(x.l * (x.l + 2) - x.m * x.m, 4 * (n + 2)) +
                          Rational(x.s * x.s, 8);
            long l2 = n - x.l, m2 = (x.m + n + 2) % period, s2 = (x.s + 2) % 4;
            Rational e2 = Rational(l2 * (l2 + 2) - m2 * m2, 4 * (n + 2)) + Rational(s2 * s2, 8);
            if (Phase::from_exponent(e1) != Phase::from_exponent(e2)) {
                f.detail = "phase not identification-invariant at n=" + std::to_string(n) + ", " +
                           x.str();
                return;
            }
        }
        for (const auto& a : sectors)
            for (const auto& b : sectors) {
                FusionVector expected = fuse(a, b);
                long al2 = n - a.l, am2 = (a.m + n + 2) % period, as2 = (a.s + 2) % 4;
                long bl2 = n - b.l, bm2 = (b.m + n + 2) % period, bs2 = (b.s + 2) % 4;
                if (raw_fuse(n, al2, am2, as2, b.l, b.m, b.s) != expected ||
                    raw_fuse(n, a.l, a.m, a.s, bl2, bm2, bs2) != expected ||
                    raw_fuse(n, al2, am2, as2, bl2, bm2, bs2) != expected) {
                    f.detail = "fusion not identification-invariant at n=" + std::to_string(n) +
                               ": " + a.str() + " x " + b.str();
                    return;
                }
            }
    }
}

// ---- C7 ----------------------------------------------------------------

void check_phase_facts(Failure& f) {
    for (long n = 1; n <= 40; ++n) {
        if (!statistics_phase(canonical(n, n, n + 2, 0)).is_minus_one()) {
            f.detail = "phase of (n,n+2,0) != -1 at n=" + std::to_string(n);
            return;
        }
        long expected = n % 2 == 0 ? 2 * n + 4 : 4 * n + 8;
        long got = order_of(canonical(n, 0, 1, 1));
        if (got != expected) {
            f.detail = "order of sigma at n=" + std::to_string(n) + " is " + std::to_string(got) +
                       ", expected " + std::to_string(expected);
            return;
        }
    }
}

// ---- C8 ----------------------------------------------------------------

void check_lambda_powers(Failure& f) {
    auto expect_single = [&f](long n, long power, const NSFermiSector& want) {
        NSFusionVector got = sector_power_ns(canonical_ns(n, n, -n), power);
        if (got.size() != 1 || got.begin()->second != 1 || !(got.begin()->first == want)) {
            f.detail = "(n,-n)^" + std::to_string(power) + " at n=" + std::to_string(n) +
                       " is not " + want.str();
            return false;
        }
        return true;
    };
    for (long k = 1; k <= 12; ++k) {
        if (!expect_single(4 * k, 2 * k + 1, canonical_ns(4 * k, 4 * k, 0)))
            return;
        if (!expect_single(4 * k - 2, 2 * k, canonical_ns(4 * k - 2, 4 * k - 2, 0)))
            return;
        if (!expect_single(4 * k - 1, 2 * k, canonical_ns(4 * k - 1, 4 * k - 1, -1)))
            return;
        if (4 * k - 3 >= 1 && !expect_single(4 * k - 3, 2 * k, canonical_ns(4 * k - 3, 4 * k - 3, 1)))
            return;
    }
}

// ---- C9 ----------------------------------------------------------------

void check_classification(Failure& f, long max_n) {
    for (long n = 1; n <= max_n; ++n) {
        auto brute = phase_one_maximal_subgroups(n);
        auto pred = case_formula_prediction(n);
        std::set<std::vector<CosetSector>> bset, pset;
        for (const auto& g : brute)
            bset.insert(g.elements);
        for (const auto& g : pred.groups)
            pset.insert(g.elements);
        if (bset != pset) {
            f.detail = "case formulas disagree with brute force at n=" + std::to_string(n);
            return;
        }
        for (const auto& g : brute)
            if (g.invariant_factors.size() != 1) {
                f.detail = "non-cyclic maximal phase-1 subgroup at n=" + std::to_string(n);
                return;
            }
    }

    auto pred32 = case_formula_prediction(32);
    if (pred32.k != 17) {
        f.detail = "n=32 minimal exponent is " + std::to_string(pred32.k) + ", expected 17";
        return;
    }
    auto brute32 = phase_one_maximal_subgroups(32);
    if (brute32.size() != 2 || brute32[0].order() != 4 || brute32[1].order() != 4) {
        f.detail = "n=32 does not have exactly two maximal subgroups of order 4";
        return;
    }
    if (phase_one_dim1_sectors(32).size() != 6) {
        f.detail = "n=32 phase-1 dimension-1 sector count != 6";
        return;
    }

    auto brute6 = phase_one_maximal_subgroups(6);
    auto want6 = generated_subgroup(6, {canonical(6, 6, 4, 0)});
    if (brute6.size() != 1 || !(brute6[0] == want6) || brute6[0].order() != 4) {
        f.detail = "n=6 maximal subgroup is not the order-4 group generated by (6,4,0)";
        return;
    }

    for (long j = 2; j <= 10; ++j) {
        long n = j * j - 2;
        auto grp = generated_subgroup(n, {canonical(n, 0, 2 * j, 0)});
        bool phase_ok = std::all_of(grp.elements.begin(), grp.elements.end(),
                                    [](const auto& x) { return statistics_phase(x).is_one(); });
        if (grp.order() != j || !phase_ok) {
            f.detail = "n=j^2-2 with j=" + std::to_string(j) +
                       ": (0,2j,0) does not generate an order-j phase-1 subgroup";
            return;
        }
    }
}

// ---- C10 ---------------------------------------------------------------

void check_sixteen_divisibility(Failure& f, long max_n) {
    for (long n = 1; n <= max_n; ++n) {
        if (n % 16 == 0)
            continue;
        for (const auto& x : all_sectors(n))
            if (is_dim_one(x) && x.s % 2 == 1 && statistics_phase(x).is_one()) {
                f.detail = "odd-s phase-1 sector " + x.str() + " at n=" + std::to_string(n) +
                           " with 16 not dividing n";
                return;
            }
    }
}

// ---- C11 ---------------------------------------------------------------

void check_chiral_ring(Failure& f) {
    for (long n = 1; n <= 8; ++n) {
        for (long l1 = 0; l1 <= n; ++l1)
            for (long l2 = 0; l2 <= n; ++l2) {
                ChiralRingElement a{{l1, 1}}, b{{l2, 1}};
                if (chiral_product(a, b, n) != chiral_product(b, a, n)) {
                    f.detail = "chiral ring not commutative at n=" + std::to_string(n);
                    return;
                }
                for (long l3 = 0; l3 <= n; ++l3) {
                    ChiralRingElement c{{l3, 1}};
                    if (chiral_product(chiral_product(a, b, n), c, n) !=
                        chiral_product(a, chiral_product(b, c, n), n)) {
                        f.detail = "chiral ring not associative at n=" + std::to_string(n);
                        return;
                    }
                }
            }
        // Against Z[x]/(x^{n+1}): e_l e_m = e_{l+m} when l+m <= n, else 0.
        for (long l1 = 0; l1 <= n; ++l1)
            for (long l2 = 0; l2 <= n; ++l2) {
                ChiralRingElement got = chiral_product({{l1, 1}}, {{l2, 1}}, n);
                ChiralRingElement want;
                if (l1 + l2 <= n)
                    want[l1 + l2] = 1;
                if (got != want) {
                    f.detail = "chiral structure constants differ from Z[x]/(x^(n+1)) at n=" +
                               std::to_string(n);
                    return;
                }
            }
        // Same structure constants out of the fermionic fusion ring.
        for (long l1 = 0; l1 <= n; ++l1)
            for (long l2 = 0; l2 <= n; ++l2) {
                NSFusionVector full = fuse_ns(canonical_ns(n, l1, -l1), canonical_ns(n, l2, -l2));
                ChiralRingElement truncated;
                for (const auto& [sec, mult] : full) {
                    long period = 2 * n + 4;
                    // chiral iff one representative has m = -l mod 2n+4
                    if ((sec.m + sec.l) % period == 0)
                        truncated[sec.l] += mult;
                    else if (((sec.m + n + 2) % period + (n - sec.l)) % period == 0)
                        truncated[n - sec.l] += mult;
                }
                ChiralRingElement want = chiral_product({{l1, 1}}, {{l2, 1}}, n);
                if (truncated != want) {
                    f.detail = "truncated fermionic fusion differs from the chiral product at n=" +
                               std::to_string(n) + ", l1=" + std::to_string(l1) +
                               ", l2=" + std::to_string(l2);
                    return;
                }
            }
    }
}

// ---- C12 ---------------------------------------------------------------

void check_flow_bijection(Failure& f) {
    for (long n = 1; n <= 6; ++n) {
        auto chir = chiral_labels(n);
        auto rvac = ramond_vacuum_sectors(n);
        if (chir.size() != static_cast<std::size_t>(n + 1) || rvac.size() != chir.size()) {
            f.detail = "chiral / Ramond vacuum label counts differ from n+1 at n=" +
                       std::to_string(n);
            return;
        }
        std::set<DiscreteLabel> image;
        for (const auto& lab : chir) {
            DiscreteLabel tgt = flow_discrete_label(n, lab, SectorType::NS, Rational(-1, 2));
            if (!std::count(rvac.begin(), rvac.end(), tgt)) {
                f.detail = "chiral label " + lab.str() + " flows to non-vacuum " + tgt.str() +
                           " at n=" + std::to_string(n);
                return;
            }
            image.insert(tgt);
        }
        if (image.size() != chir.size()) {
            f.detail = "flow of chiral labels is not injective at n=" + std::to_string(n);
            return;
        }
    }
    for (long n = 1; n <= 4; ++n) {
        for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
            DiscreteLabel down = flow_discrete_label(n, lab, SectorType::NS, Rational(-1, 2));
            DiscreteLabel back = flow_discrete_label(n, down, SectorType::R, Rational(1, 2));
            if (!(back == lab)) {
                f.detail = "round trip " + lab.str() + " -> " + down.str() + " -> " + back.str() +
                           " at n=" + std::to_string(n);
                return;
            }
        }
    }
}

// ---- C13 ---------------------------------------------------------------

void check_index_pairing(Failure& f) {
    for (long n = 1; n <= 3; ++n) {
        auto rvac = ramond_vacuum_sectors(n);
        auto matrix = index_pairing_matrix(n);
        for (std::size_t i = 0; i < matrix.size(); ++i)
            for (std::size_t j = 0; j < matrix.size(); ++j)
                if (matrix[i][j] != (i == j ? 1 : 0)) {
                    f.detail = "pairing matrix not identity at n=" + std::to_string(n);
                    return;
                }
        Rational c24 = discrete_c(n) * Rational(1, 24);
        for (const auto& lab : enumerate_labels(n, SectorType::R)) {
            long expected = hq_r(lab).h == c24 ? 1 : 0;
            if (index_pairing(lab, lab, n) != expected) {
                f.detail = "self-pairing of " + lab.str() + " != " + std::to_string(expected) +
                           " at n=" + std::to_string(n);
                return;
            }
            if (index_via_supercharge_kernels(lab, n) != expected) {
                f.detail = "graded supercharge kernels disagree at " + lab.str() + ", n=" +
                           std::to_string(n);
                return;
            }
        }
    }
}

// ---- C14 ---------------------------------------------------------------

void check_supercharge_identities(Failure& f) {
    for (long n = 1; n <= 3; ++n) {
        for (const auto& lab : enumerate_labels(n, SectorType::R)) {
            CHQ w = hq_r(lab);
            ModuleHandle mod({w.c, w.h, w.q, SectorType::R}, Rational(2));
            for (Rational lv(0); lv <= Rational(2); lv += Rational(1)) {
                auto basis = mod.level_basis(lv);
                if (basis.empty())
                    continue;
                Mat gp = mod.zero_mode_matrix(ZeroMode::G0plus, lv);
                Mat gm = mod.zero_mode_matrix(ZeroMode::G0minus, lv);
                Mat l0 = mod.zero_mode_matrix(ZeroMode::L0, lv);
                Mat j0 = mod.zero_mode_matrix(ZeroMode::J0, lv);
                Mat q = mat_add(gp, gm);
                Mat lhs = mat_mul(q, q);
                Mat rhs = mat_sub(mat_scale(Rational(2), l0),
                                  mat_scale(w.c * Rational(1, 12), mat_identity(basis.size())));
                if (!mat_equal(lhs, rhs)) {
                    f.detail = "(G0+ + G0-)^2 != 2L0 - c/12 at " + lab.str() + ", n=" +
                               std::to_string(n) + ", level " + lv.str();
                    return;
                }
                Mat comm = mat_sub(mat_mul(j0, q), mat_mul(q, j0));
                if (!mat_equal(comm, mat_sub(gp, gm))) {
                    f.detail = "[J0, G0+ + G0-] != G0+ - G0- at " + lab.str() + ", n=" +
                               std::to_string(n) + ", level " + lv.str();
                    return;
                }
            }
        }
    }
}

// ---- finer invariants for verify-all ------------------------------------

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

void check_scalar_axioms(Failure& f) {
    std::mt19937_64 rng(20240311);
    auto random_scalar = [&rng]() {
        return Scalar(random_rational(rng), random_rational(rng), random_rational(rng),
                      random_rational(rng));
    };
    for (int trial = 0; trial < 200; ++trial) {
        Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
        if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z)) {
            f.detail = "scalar field axiom failed";
            return;
        }
        if (!x.is_zero() && !(x * x.inverse() == Scalar(1))) {
            f.detail = "scalar inverse failed for " + x.str();
            return;
        }
        Rational p = random_rational(rng), q = random_rational(rng);
        if (Phase::from_exponent(p) * Phase::from_exponent(q) != Phase::from_exponent(p + q)) {
            f.detail = "phase multiplication is not additive on exponents";
            return;
        }
        long k = static_cast<long>(trial % 13) - 6;
        if (phase_pow(Phase::from_exponent(p), k) != Phase::from_exponent(p * Rational(k))) {
            f.detail = "phase_pow does not distribute over the exponent";
            return;
        }
        if (Rational::parse(p.str()) != p) {
            f.detail = "rational string round trip failed for " + p.str();
            return;
        }
    }
}

void check_algebra_structure(Failure& f) {
    for (const Rational& t : {Rational(0), Rational(1, 2)}) {
        auto pool = generator_window(t, 3);
        for (const auto& a : pool)
            for (const auto& b : pool) {
                Rational sign = (a.odd() && b.odd()) ? Rational(1) : Rational(-1);
                if (!(bracket(a, b, t) == Scalar(sign) * bracket(b, a, t))) {
                    f.detail = "super-antisymmetry fails at [" + fmt_pair(a, b) + "]";
                    return;
                }
                if (!(adjoint(flow(t, a)) == flow_elem(t, adjoint(AlgebraElement(a))))) {
                    f.detail = "flow does not commute with the adjoint at " + a.str();
                    return;
                }
            }
    }
    std::mt19937_64 rng(777);
    auto pool = generator_window(Rational(0), 3);
    for (int trial = 0; trial < 50; ++trial) {
        AlgebraElement x;
        for (int k = 0; k < 4; ++k)
            x.add(pool[rng() % pool.size()],
                  Scalar(random_rational(rng), random_rational(rng), random_rational(rng),
                         random_rational(rng)));
        if (!(adjoint(adjoint(x)) == x)) {
            f.detail = "adjoint is not an involution";
            return;
        }
    }
    // G^1, G^2 zero-mode behaviour in the Ramond algebra:
    // {G^1_0, G^1_0} = 2L_0 - c/12 and [J_0, G^1_0] = i G^2_0.
    Rational t(1, 2);
    AlgebraElement g1 = g1_combo(Rational(0));
    AlgebraElement sq = bracket_elem(g1, g1, t);
    AlgebraElement want;
    want.add(gen_L(Rational(0)), Scalar(2));
    want.add(gen_central(), Scalar(Rational(-1, 12)));
    if (!(sq == want)) {
        f.detail = "{G1_0, G1_0} != 2L_0 - c/12";
        return;
    }
    AlgebraElement rot = bracket_elem(AlgebraElement(gen_J(Rational(0))), g1, t);
    if (!(rot == Scalar::i() * g2_combo(Rational(0)))) {
        f.detail = "[J_0, G1_0] != i G2_0";
        return;
    }
}

void check_module_structure(Failure& f) {
    // Sample module with both fermionic and bosonic descendants.
    CHQ w = hq_ns({2, 1, 1});
    ModuleHandle mod({w.c, w.h, w.q, SectorType::NS}, Rational(2));

    // Cross-block inner products vanish.
    std::vector<StateMonomial> sample;
    for (const auto& [key, basis] : mod.blocks())
        sample.insert(sample.end(), basis.begin(), basis.end());
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j) {
            bool same_block = sample[i].level() == sample[j].level() &&
                              sample[i].charge_offset() == sample[j].charge_offset();
            if (!same_block && !mod.inner(sample[i], sample[j]).is_zero()) {
                f.detail = "nonzero inner product across blocks: " + sample[i].str() + " vs " +
                           sample[j].str();
                return;
            }
        }

    // Adjointness <x u, v> = <u, x* v> for sampled modes.
    std::vector<GeneratorId> modes = {gen_L(Rational(-1)), gen_L(Rational(1)),
                                      gen_J(Rational(-1)), gen_Gp(Rational(-1, 2)),
                                      gen_Gm(Rational(3, 2))};
    for (const auto& x : modes)
        for (const auto& u : sample)
            for (const auto& v : sample) {
                if (u.level() - x.idx > mod.cutoff() || u.level() - x.idx < Rational(0))
                    continue;
                Combo xu = mod.apply(x, u);
                Combo xsv = mod.apply(adjoint_gen(x), Combo{{v, Rational(1)}});
                Rational lhs(0);
                for (const auto& [m, r] : xu)
                    lhs += r * mod.inner(m, Combo{{v, Rational(1)}});
                Rational rhs = mod.inner(u, xsv);
                if (lhs != rhs) {
                    f.detail = "adjointness fails for " + x.str() + " between " + u.str() +
                               " and " + v.str();
                    return;
                }
            }

    // Grading: anticommutes with G modes, commutes with L and J modes.
    CHQ wr = hq_r({2, 1, 0});
    ModuleHandle rmod({wr.c, wr.h, wr.q, SectorType::R}, Rational(2));
    for (const auto& [key, basis] : rmod.blocks())
        for (const auto& state : basis) {
            for (const auto& g : {gen_Gp(Rational(0)), gen_Gm(Rational(-1)), gen_L(Rational(-1)),
                                  gen_J(Rational(-1))}) {
                if (key.level - g.idx > rmod.cutoff())
                    continue;
                int s0 = rmod.grading_sign(state);
                int expect = g.odd() ? -s0 : s0;
                for (const auto& [m, r] : rmod.apply(g, state))
                    if (rmod.grading_sign(m) != expect) {
                        f.detail = "grading sign wrong on " + g.str() + " " + state.str();
                        return;
                    }
            }
        }

    // R vacuum zero modes vanish on the lowest space.
    CHQ wv = hq_r({2, 0, 1});
    ModuleHandle vmod({wv.c, wv.h, wv.q, SectorType::R}, Rational(1));
    Mat gp0 = vmod.mode_matrix(gen_Gp(Rational(0)), {Rational(0), wv.q});
    Mat gm0 = vmod.mode_matrix(gen_Gm(Rational(0)), {Rational(0), wv.q});
    if (!mat_is_zero(gp0) || !mat_is_zero(gm0)) {
        f.detail = "G_0^+- do not vanish on the Ramond vacuum lowest space";
        return;
    }
}

void check_unitarity_cross_validation(Failure& f) {
    for (long n = 0; n <= 3; ++n) {
        for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
            CHQ w = hq_ns(lab);
            auto res = region_check(SectorType::NS, w.c, w.h, w.q);
            if (res.region != Region::NS3 ||
                !std::count(res.labels.begin(), res.labels.end(), lab)) {
                f.detail = "region_check misses NS label " + lab.str() + " at n=" +
                           std::to_string(n);
                return;
            }
        }
        for (const auto& lab : enumerate_labels(n, SectorType::R)) {
            CHQ w = hq_r(lab);
            auto res = region_check(SectorType::R, w.c, w.h, w.q);
            if (res.region != Region::R3 ||
                !std::count(res.labels.begin(), res.labels.end(), lab)) {
                f.detail = "region_check misses R label " + lab.str() + " at n=" +
                           std::to_string(n);
                return;
            }
        }
    }
    if (region_check(SectorType::NS, Rational(1), Rational(1, 6) + Rational(1, 137),
                     Rational(-1, 3))
            .region != Region::None) {
        f.detail = "perturbed c<3 weight not rejected";
        return;
    }
    if (region_check(SectorType::NS, Rational(3), Rational(1), Rational(0)).region !=
        Region::NS1) {
        f.detail = "(c,h,q)=(3,1,0) not in NS1";
        return;
    }
    // h = 0 forces q = 0 among the NS discrete weights.
    for (long n = 0; n <= 20; ++n)
        for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
            CHQ w = hq_ns(lab);
            if (w.h.is_zero() && !w.q.is_zero()) {
                f.detail = "NS label with h=0, q!=0 at n=" + std::to_string(n);
                return;
            }
        }
}

void check_fusion_extras(Failure& f) {
    for (long n = 1; n <= 6; ++n) {
        for (const auto& x : all_sectors(n)) {
            FusionVector prod = fuse(x, conjugate(x));
            auto it = prod.find(sector_identity(n));
            if (it == prod.end() || it->second != 1) {
                f.detail = "identity does not appear once in " + x.str() + " x conj at n=" +
                           std::to_string(n);
                return;
            }
        }
        auto ns = all_ns_sectors(n);
        for (const auto& a : ns)
            for (const auto& b : ns) {
                if (fuse_ns(a, b) != fuse_ns(b, a)) {
                    f.detail = "NS fusion not commutative at n=" + std::to_string(n);
                    return;
                }
                NSFusionVector ab = fuse_ns(a, b);
                for (const auto& c : ns) {
                    if (fuse(ab, NSFusionVector{{c, 1}}) !=
                        fuse(NSFusionVector{{a, 1}}, fuse_ns(b, c))) {
                        f.detail = "NS fusion not associative at n=" + std::to_string(n);
                        return;
                    }
                }
            }
        // The vacuum-pair generator collapses to the identity class.
        if (!(canonical(n, n, n + 2, 2) == sector_identity(n))) {
            f.detail = "(n,n+2,2) is not the identity class at n=" + std::to_string(n);
            return;
        }
    }
}

void check_classification_extras(Failure& f, long max_n) {
    for (long n = 1; n <= std::max(max_n, 64L); ++n) {
        // Closure of the phase-1 even powers of sigma (the case [A] lemma).
        CosetSector sigma2 = canonical(n, 0, 2, 2);
        long ord = order_of(sigma2);
        std::set<long> phase_one;
        CosetSector acc = sector_identity(n);
        for (long a = 0; a < ord; ++a) {
            if (statistics_phase(acc).is_one())
                phase_one.insert(a);
            acc = fuse(acc, sigma2).begin()->first;
        }
        for (long a : phase_one)
            for (long b : phase_one)
                if (!phase_one.count((a + b) % ord)) {
                    f.detail = "phase-1 even powers of sigma are not closed at n=" +
                               std::to_string(n);
                    return;
                }
    }
    for (long n = 16; n <= 128; n += 16) {
        auto pred = case_formula_prediction(n);
        if (pred.k % 2 != 1) {
            f.detail = "case D minimal exponent is even at n=" + std::to_string(n);
            return;
        }
    }
    for (long n = 1; n <= 40; ++n) {
        auto g = dim1_group(n);
        if (g.order() != 4 * n + 8) {
            f.detail = "dimension-1 sector count != 4n+8 at n=" + std::to_string(n);
            return;
        }
        std::vector<long> expect = n % 2 == 1 ? std::vector<long>{4 * n + 8}
                                              : std::vector<long>{2 * n + 4, 2};
        if (g.invariant_factors != expect) {
            f.detail = "dimension-1 group structure unexpected at n=" + std::to_string(n);
            return;
        }
        if (order_of(g.sigma) != (n % 2 == 0 ? 2 * n + 4 : 4 * n + 8)) {
            f.detail = "sigma order unexpected at n=" + std::to_string(n);
            return;
        }
        if (g.tau && order_of(*g.tau) != 2) {
            f.detail = "tau order != 2 at n=" + std::to_string(n);
            return;
        }
    }
}

void check_chiral_extras(Failure& f) {
    for (long n = 0; n <= 12; ++n) {
        if (ramond_vacuum_sectors(n).size() != static_cast<std::size_t>(n + 1)) {
            f.detail = "|Ramond vacuum labels| != n+1 at n=" + std::to_string(n);
            return;
        }
    }
    // Flow of the NS vacuum lowest vector by t=1: (h,q) = (c/6, c/3).
    for (long n = 1; n <= 8; ++n) {
        Rational c = discrete_c(n);
        auto [h1, q1] = flow_lowest_vector(c, Rational(0), Rational(0), Rational(1));
        if (h1 != c * Rational(1, 6) || q1 != c * Rational(1, 3)) {
            f.detail = "vacuum flow at t=1 is not (c/6, c/3)";
            return;
        }
    }
    // Chirality predicates on the discrete labels: chiral iff m = -l,
    // antichiral iff m = l.
    for (long n = 1; n <= 8; ++n)
        for (const auto& lab : enumerate_labels(n, SectorType::NS)) {
            CHQ w = hq_ns(lab);
            if (is_chiral(w.c, w.h, w.q) != (lab.m == -lab.l) ||
                is_antichiral(w.c, w.h, w.q) != (lab.m == lab.l)) {
                f.detail = "chirality predicate mismatch at " + lab.str() + ", n=" +
                           std::to_string(n);
                return;
            }
        }
}

void check_representation_property(Failure& f) {
    // The straightened action is a representation: acting with [a,b] equals
    // the super-commutator of the two actions, on every basis state whose
    // intermediate levels stay within the cutoff.
    struct Case {
        HighestWeight hw;
        Rational cutoff;
    };
    CHQ w1 = hq_ns({2, 2, 0});
    CHQ w2 = hq_r({3, 2, 1});
    std::vector<Case> cases = {{{w1.c, w1.h, w1.q, SectorType::NS}, Rational(2)},
                               {{w2.c, w2.h, w2.q, SectorType::R}, Rational(2)}};
    for (const auto& cs : cases) {
        ModuleHandle mod(cs.hw, cs.cutoff);
        Rational t = mod.flow_param();
        std::vector<GeneratorId> modes;
        for (const auto& g : generator_window(t, 2))
            if (g.fam != Family::Central)
                modes.push_back(g);
        for (const auto& a : modes)
            for (const auto& b : modes) {
                AlgebraElement br = bracket(a, b, t);
                Rational eps = (a.odd() && b.odd()) ? Rational(1) : Rational(-1);
                for (const auto& [key, basis] : mod.blocks()) {
                    // keep a.b.m and b.a.m within the truncation
                    Rational need = key.level + a.idx.abs() + b.idx.abs();
                    if (need > cs.cutoff)
                        continue;
                    for (const auto& m : basis) {
                        Combo one{{m, Rational(1)}};
                        Combo lhs = combo_add(mod.apply(a, mod.apply(b, one)),
                                              combo_scale(eps, mod.apply(b, mod.apply(a, one))));
                        Combo rhs;
                        for (const auto& [g, coeff] : br.terms())
                            rhs = combo_add(rhs,
                                            combo_scale(coeff.to_rational(), mod.apply(g, one)));
                        if (lhs != rhs) {
                            f.detail = "action of [" + a.str() + "," + b.str() +
                                       "] disagrees with the commutator of actions on " +
                                       m.str();
                            return;
                        }
                    }
                }
            }
    }
}

struct CheckDef {
    std::string id;
    std::string description;
    std::function<void(Failure&)> body;
};

CheckResult run_one(const CheckDef& def) {
    CheckResult res;
    res.id = def.id;
    res.description = def.description;
    auto start = Clock::now();
    Failure f;
    try {
        def.body(f);
        res.pass = f.detail.empty();
        res.detail = res.pass ? f.note : f.detail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
}

std::vector<CheckDef> acceptance_checks(const CheckOptions& opts) {
    long class_n = opts.max_n > 0 ? opts.max_n : 64;
    return {
        {"C1", "graded Jacobi identity, indices in [-4,4], t in {0, 1/2}",
         [](Failure& f) { check_jacobi(f); }},
        {"C2", "spectral flow: inverse and bracket homomorphism, t in {+-1/2, 1, 2, 5/2}",
         [](Failure& f) { check_flow(f); }},
        {"C3", "discrete-series Gram blocks PSD (n<=3, level<=2); perturbed weight fails",
         [](Failure& f) { check_unitarity_psd(f); }},
        {"C4", "c=1 NS vacuum null vectors: dim 0 at energy 1/2, dim 1 at energy 1",
         [](Failure& f) { check_vacuum_null(f); }},
        {"C5", "maximal NS lowest energy at (n,0) / (n,+-1), n<=20",
         [](Failure& f) { check_max_energy(f); }},
        {"C6", "coset fusion commutative+associative (n<=5); identification-invariant (n<=10)",
         [](Failure& f) { check_fusion_ring(f); }},
        {"C7", "phase((n,n+2,0)) = -1 and order of sigma, n<=40",
         [](Failure& f) { check_phase_facts(f); }},
        {"C8", "(n,-n) fermionic power identities, k<=12",
         [](Failure& f) { check_lambda_powers(f); }},
        {"C9", "maximal phase-1 subgroups: brute force = case formulas (n<=" +
                   std::to_string(class_n) + "), cyclic; n=32 and n=6 and n=j^2-2 facts",
         [class_n](Failure& f) { check_classification(f, class_n); }},
        {"C10", "no odd-s phase-1 dimension-1 sector unless 16 | n, n<=64",
         [](Failure& f) { check_sixteen_divisibility(f, 64); }},
        {"C11", "chiral ring commutative, associative, = Z[x]/(x^(n+1)), n<=8",
         [](Failure& f) { check_chiral_ring(f); }},
        {"C12", "flow bijection chiral <-> Ramond vacuum (n<=6) and round trip (n<=4)",
         [](Failure& f) { check_flow_bijection(f); }},
        {"C13", "index pairing matrix = identity over Ramond vacua; 0 self-pairing otherwise",
         [](Failure& f) { check_index_pairing(f); }},
        {"C14", "supercharge identities (G0+ + G0-)^2 = 2L0 - c/12 and [J0,Q] rotation",
         [](Failure& f) { check_supercharge_identities(f); }},
    };
}

std::vector<CheckDef> extra_checks(const CheckOptions& opts) {
    long class_n = opts.max_n > 0 ? opts.max_n : 64;
    return {
        {"X1", "scalar field axioms, phase exponent arithmetic, string round trips",
         [](Failure& f) { check_scalar_axioms(f); }},
        {"X2", "super-antisymmetry, adjoint involution, flow-adjoint compatibility, G1/G2",
         [](Failure& f) { check_algebra_structure(f); }},
        {"X3", "module block orthogonality, adjointness, grading, Ramond vacuum zero modes",
         [](Failure& f) { check_module_structure(f); }},
        {"X4", "region_check matches the discrete labels; h=0 forces q=0",
         [](Failure& f) { check_unitarity_cross_validation(f); }},
        {"X5", "sector conjugates, NS ring commutative+associative (n<=6), vacuum pair",
         [](Failure& f) { check_fusion_extras(f); }},
        {"X6", "phase-1 power closure, case D parity, dimension-1 group structure",
         [class_n](Failure& f) { check_classification_extras(f, class_n); }},
        {"X7", "Ramond vacuum counts, vacuum flow values, chirality predicates",
         [](Failure& f) { check_chiral_extras(f); }},
        {"X8", "module action represents the algebra: [a,b] acts as the super-commutator",
         [](Failure& f) { check_representation_property(f); }},
    };
}

} // namespace

std::vector<CheckResult> run_acceptance(const CheckOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& def : acceptance_checks(opts))
        out.push_back(run_one(def));
    return out;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opts) {
    std::vector<CheckResult> out = run_acceptance(opts);
    for (const auto& def : extra_checks(opts))
        out.push_back(run_one(def));
    return out;
}

} // namespace svir
