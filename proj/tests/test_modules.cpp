#include "svir/module.hpp"
#include "svir/unitarity.hpp"

#include <doctest.h>

using namespace svir;

TEST_CASE("c=1 NS vacuum module null structure") {
    ModuleHandle mod({Rational(1), Rational(0), Rational(0), SectorType::NS}, Rational(1));

    // level 1/2: both G-descendants are null
    CHECK(mod.gram_rank(Rational(1, 2), Rational(1)) == 0);
    CHECK(mod.gram_rank(Rational(1, 2), Rational(-1)) == 0);
    // <G+-_{-1/2} O, G+-_{-1/2} O> = 2h -+ q = 0
    StateMonomial gp{LowestTag::Omega, {gen_Gp(Rational(-1, 2))}};
    CHECK(mod.inner(gp, gp) == Rational(0));

    // level 1: L_{-1} O is null, J_{-1} O has norm c/3
    CHECK(mod.gram_rank(Rational(1), Rational(0)) == 1);
    StateMonomial l1{LowestTag::Omega, {gen_L(Rational(-1))}};
    StateMonomial j1{LowestTag::Omega, {gen_J(Rational(-1))}};
    CHECK(mod.inner(l1, l1) == Rational(0));
    CHECK(mod.inner(j1, j1) == Rational(1, 3));
    CHECK(mod.inner(l1, j1) == Rational(0));

    auto coeffs = mod.character_coeffs();
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == std::pair{Rational(0), 1L});
    CHECK(coeffs[1] == std::pair{Rational(1, 2), 0L});
    CHECK(coeffs[2] == std::pair{Rational(1), 1L});
}

TEST_CASE("chiral highest weight has the level-1/2 null vector") {
    // h = q/2 > 0: gram at level 1/2 is diag(2h-q, 2h+q) = diag(0, 4h)
    Rational h(1, 8), q(1, 4), c(3, 2);
    ModuleHandle mod({c, h, q, SectorType::NS}, Rational(1, 2));
    CHECK(mod.gram_rank(Rational(1, 2), q + Rational(1)) == 0);
    CHECK(mod.gram_rank(Rational(1, 2), q - Rational(1)) == 1);
    StateMonomial gm{LowestTag::Omega, {gen_Gm(Rational(-1, 2))}};
    CHECK(mod.inner(gm, gm) == Rational(4) * h);
    CHECK(mod.gram_is_psd());
}

TEST_CASE("Ramond vacuum module: one-dimensional lowest space, zero modes vanish") {
    // n=1 label (0,1): h = 1/24 = c/24, q = 1/6
    CHQ w = hq_r({1, 0, 1});
    CHECK(w.h == w.c * Rational(1, 24));
    ModuleHandle mod({w.c, w.h, w.q, SectorType::R}, Rational(2));
    CHECK(mod.block_basis({Rational(0), w.q}).size() == 1);
    Mat gp = mod.mode_matrix(gen_Gp(Rational(0)), {Rational(0), w.q});
    Mat gm = mod.mode_matrix(gen_Gm(Rational(0)), {Rational(0), w.q});
    CHECK(mat_is_zero(gp));
    CHECK(mat_is_zero(gm));
    CHECK(mod.gram_is_psd());
}

TEST_CASE("Ramond two-dimensional lowest space conventions") {
    // n=1 label (1,0): h = 3/8 > c/24 = 1/24
    CHQ w = hq_r({1, 1, 0});
    ModuleHandle mod({w.c, w.h, w.q, SectorType::R}, Rational(2));
    StateMonomial om{LowestTag::OmegaMinus, {}};
    StateMonomial op{LowestTag::OmegaPlus, {}};
    Rational norm_plus = Rational(2) * w.h - w.c * Rational(1, 12);

    CHECK(mod.inner(om, om) == Rational(1));
    CHECK(mod.inner(op, op) == norm_plus);
    CHECK(mod.inner(om, op) == Rational(0));

    // G0- Omega- = Omega+, G0+ Omega+ = (2h - c/12) Omega-, both other zero
    CHECK(mod.apply(gen_Gm(Rational(0)), om) == Combo{{op, Rational(1)}});
    CHECK(mod.apply(gen_Gp(Rational(0)), op) == Combo{{om, norm_plus}});
    CHECK(mod.apply(gen_Gp(Rational(0)), om).empty());
    CHECK(mod.apply(gen_Gm(Rational(0)), op).empty());

    // grading: Omega- even, Omega+ odd
    CHECK(mod.grading_sign(om) == 1);
    CHECK(mod.grading_sign(op) == -1);

    // (G0+)^2 = 0 and {G0+, G0-} = 2 L0 - c/12 on every level
    for (long lv = 0; lv <= 2; ++lv) {
        Mat gp = mod.zero_mode_matrix(ZeroMode::G0plus, Rational(lv));
        Mat gm = mod.zero_mode_matrix(ZeroMode::G0minus, Rational(lv));
        Mat l0 = mod.zero_mode_matrix(ZeroMode::L0, Rational(lv));
        CHECK(mat_is_zero(mat_mul(gp, gp)));
        CHECK(mat_is_zero(mat_mul(gm, gm)));
        Mat anti = mat_add(mat_mul(gp, gm), mat_mul(gm, gp));
        Mat want = mat_sub(mat_scale(Rational(2), l0),
                           mat_scale(w.c * Rational(1, 12), mat_identity(anti.size())));
        CHECK(mat_equal(anti, want));
    }
}

TEST_CASE("grading sign conventions") {
    ModuleHandle ns({Rational(1), Rational(0), Rational(0), SectorType::NS}, Rational(3, 2));
    StateMonomial omega{LowestTag::Omega, {}};
    CHECK(ns.grading_sign(omega) == 1);
    StateMonomial gp{LowestTag::Omega, {gen_Gp(Rational(-1, 2))}};
    CHECK(ns.grading_sign(gp) == -1);
    StateMonomial mixed{LowestTag::Omega, {gen_L(Rational(-1)), gen_Gp(Rational(-1, 2))}};
    CHECK(ns.grading_sign(mixed) == -1);
}

TEST_CASE("NS modules reject Ramond zero modes and bad weights") {
    ModuleHandle ns({Rational(1), Rational(0), Rational(0), SectorType::NS}, Rational(1));
    CHECK_THROWS_AS(ns.zero_mode_matrix(ZeroMode::G0plus, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ModuleHandle({Rational(1), Rational(-1), Rational(0), SectorType::NS},
                                 Rational(1)),
                    std::domain_error);
    // R requires h >= c/24
    CHECK_THROWS_AS(ModuleHandle({Rational(1), Rational(1, 48), Rational(0), SectorType::R},
                                 Rational(1)),
                    std::domain_error);
}

TEST_CASE("discrete-series module is PSD, perturbed weight is not") {
    CHQ w = hq_ns({1, 1, 1});
    CHECK(w.c == Rational(1));
    CHECK(w.h == Rational(1, 6));
    CHECK(w.q == Rational(-1, 3));
    ModuleHandle good({w.c, w.h, w.q, SectorType::NS}, Rational(2));
    CHECK(good.gram_is_psd());

    ModuleHandle bad({w.c, w.h + Rational(1, 137), w.q, SectorType::NS}, Rational(2));
    CHECK(!bad.gram_is_psd());
    auto witness = bad.first_non_psd_block();
    REQUIRE(witness.has_value());
    CHECK(witness->level == Rational(1));
    CHECK(witness->charge == Rational(-1, 3));
    CHECK(!mat_psd(bad.gram(*witness)).is_psd);
}

TEST_CASE("mode matrices respect block transitions") {
    CHQ w = hq_ns({2, 1, 1});
    ModuleHandle mod({w.c, w.h, w.q, SectorType::NS}, Rational(3, 2));
    BlockKey from{Rational(0), w.q};
    Mat m = mod.mode_matrix(gen_Gp(Rational(-1, 2)), from);
    CHECK(m.size() == mod.block_basis({Rational(1, 2), w.q + Rational(1)}).size());
    CHECK(m[0].size() == 1);
    CHECK_THROWS_AS(mod.mode_matrix(gen_L(Rational(-3)), from), std::domain_error);
    CHECK_THROWS_AS(mod.mode_matrix(gen_Gp(Rational(0)), from), std::domain_error);
}
