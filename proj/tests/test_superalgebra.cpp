#include "svir/superalgebra.hpp"

#include <doctest.h>

using namespace svir;

namespace {
const Rational t0(0);
const Rational t_half(1, 2);
} // namespace

TEST_CASE("displayed bracket relations") {
    // [L_2, L_-2] = 4 L_0 + c/2
    AlgebraElement lhs = bracket(gen_L(2), gen_L(-2), t0);
    AlgebraElement want;
    want.add(gen_L(Rational(0)), Scalar(4));
    want.add(gen_central(), Scalar(Rational(1, 2)));
    CHECK(lhs == want);

    // [G+_r, G+_s] = 0
    CHECK(bracket(gen_Gp(Rational(1, 2)), gen_Gp(Rational(3, 2)), t0).is_zero());
    CHECK(bracket(gen_Gm(Rational(-1, 2)), gen_Gm(Rational(-1, 2)), t0).is_zero());

    // {G+_{1/2}, G-_{-1/2}} = 2 L_0 + J_0
    AlgebraElement gg = bracket(gen_Gp(Rational(1, 2)), gen_Gm(Rational(-1, 2)), t0);
    AlgebraElement want2;
    want2.add(gen_L(Rational(0)), Scalar(2));
    want2.add(gen_J(Rational(0)), Scalar(1));
    CHECK(gg == want2);

    // anticommutator is symmetric in its arguments
    CHECK(gg == bracket(gen_Gm(Rational(-1, 2)), gen_Gp(Rational(1, 2)), t0));

    // central element is central
    CHECK(bracket(gen_central(), gen_L(3), t0).is_zero());

    // invalid mode for the algebra parameter
    CHECK_THROWS_AS(bracket(gen_Gp(Rational(0)), gen_L(0), t0), std::domain_error);
    CHECK_NOTHROW(bracket(gen_Gp(Rational(0)), gen_L(0), t_half));
}

TEST_CASE("bilinear extension with Koszul signs") {
    // {G1_{1/2}, G1_{-1/2}} = 2 L_0 (cross terms cancel)
    AlgebraElement lhs = bracket_elem(g1_combo(Rational(1, 2)), g1_combo(Rational(-1, 2)), t0);
    AlgebraElement want;
    want.add(gen_L(Rational(0)), Scalar(2));
    CHECK(lhs == want);

    CHECK(bracket_elem(g1_combo(Rational(1, 2)), AlgebraElement(), t0).is_zero());

    // [J_0, G1_0] = i G2_0 in the Ramond algebra
    AlgebraElement rot = bracket_elem(AlgebraElement(gen_J(Rational(0))), g1_combo(Rational(0)),
                                      t_half);
    CHECK(rot == Scalar::i() * g2_combo(Rational(0)));
}

TEST_CASE("adjoint") {
    CHECK(adjoint(AlgebraElement(gen_L(3))) == AlgebraElement(gen_L(-3)));
    // (i G+_{3/2})* = -i G-_{-3/2}
    AlgebraElement x(gen_Gp(Rational(3, 2)), Scalar::i());
    AlgebraElement want(gen_Gm(Rational(-3, 2)), -Scalar::i());
    CHECK(adjoint(x) == want);
    AlgebraElement y;
    y.add(gen_J(2), Scalar(Rational(1), Rational(2), Rational(3), Rational(4)));
    y.add(gen_Gm(Rational(-5, 2)), Scalar::sqrt2());
    CHECK(adjoint(adjoint(y)) == y);
}

TEST_CASE("spectral flow on generators") {
    // eta_1(G+_{-1/2}) = G+_{1/2}
    CHECK(flow(Rational(1), gen_Gp(Rational(-1, 2))) == AlgebraElement(gen_Gp(Rational(1, 2))));
    // eta_t(J_0) = J_0 + (c/3) t
    AlgebraElement j0 = flow(t_half, gen_J(0));
    AlgebraElement want;
    want.add(gen_J(Rational(0)), Scalar(1));
    want.add(gen_central(), Scalar(Rational(1, 6)));
    CHECK(j0 == want);
    // eta_0 = id
    for (const auto& g : {gen_L(2), gen_J(-1), gen_Gp(Rational(1, 2)), gen_central()})
        CHECK(flow(t0, g) == AlgebraElement(g));
    // eta'_{1/2}(L_0) = L_0 - (1/2) J_0 + c/24
    AlgebraElement l0 = flow_inverse(t_half, gen_L(0));
    AlgebraElement want2;
    want2.add(gen_L(Rational(0)), Scalar(1));
    want2.add(gen_J(Rational(0)), Scalar(Rational(-1, 2)));
    want2.add(gen_central(), Scalar(Rational(1, 24)));
    CHECK(l0 == want2);
}

TEST_CASE("jacobi defect vanishes on fixtures") {
    CHECK(jacobi_defect(gen_L(1), gen_L(2), gen_L(3), t0).is_zero());
    CHECK(jacobi_defect(gen_L(1), gen_Gp(Rational(1, 2)), gen_Gm(Rational(-1, 2)), t0).is_zero());
    CHECK(jacobi_defect(gen_Gp(Rational(1, 2)), gen_Gm(Rational(1, 2)), gen_J(1), t0).is_zero());
}
