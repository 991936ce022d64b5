#include "svir/superalgebra.hpp"

namespace svir {

Family family_from_tag(const std::string& tag) {
    if (tag == "C") return Family::Central;
    if (tag == "L") return Family::L;
    if (tag == "J") return Family::J;
    if (tag == "G+") return Family::Gplus;
    if (tag == "G-") return Family::Gminus;
    throw std::invalid_argument("unknown generator family '" + tag + "'");
}

bool generator_valid(const GeneratorId& g, const Rational& t) {
    switch (g.fam) {
        case Family::Central:
            return g.idx.is_zero();
        case Family::L:
        case Family::J:
            return g.idx.is_integer();
        case Family::Gplus:
            return (g.idx + t - Rational(1, 2)).is_integer();
        case Family::Gminus:
            return (g.idx - t - Rational(1, 2)).is_integer();
    }
    return false;
}

static void require_valid(const GeneratorId& g, const Rational& t) {
    if (!generator_valid(g, t))
        throw std::domain_error("generator " + g.str() + " is not a mode of SVir^{N=2,t} with t=" +
                                t.str());
}

AlgebraElement bracket(const GeneratorId& a, const GeneratorId& b, const Rational& t) {
    require_valid(a, t);
    require_valid(b, t);
    AlgebraElement out;
    if (a.fam == Family::Central || b.fam == Family::Central)
        return out;

    const Rational& m = a.idx;
    const Rational& n = b.idx;

    if (a.fam == Family::L && b.fam == Family::L) {
        out.add(gen_L(m + n), Scalar(m - n));
        if ((m + n).is_zero())
            out.add(gen_central(), Scalar((m * m * m - m) * Rational(1, 12)));
        return out;
    }
    if (a.fam == Family::L && (b.fam == Family::Gplus || b.fam == Family::Gminus)) {
        out.add({b.fam, m + n}, Scalar(m * Rational(1, 2) - n));
        return out;
    }
    if ((a.fam == Family::Gplus || a.fam == Family::Gminus) && b.fam == Family::L) {
        return Scalar(-1) * bracket(b, a, t);
    }
    if (a.fam == Family::L && b.fam == Family::J) {
        out.add(gen_J(m + n), Scalar(-n));
        return out;
    }
    if (a.fam == Family::J && b.fam == Family::L) {
        return Scalar(-1) * bracket(b, a, t);
    }
    if (a.fam == Family::J && b.fam == Family::J) {
        if ((m + n).is_zero())
            out.add(gen_central(), Scalar(m * Rational(1, 3)));
        return out;
    }
    if ((a.fam == Family::Gplus && b.fam == Family::Gminus) ||
        (a.fam == Family::Gminus && b.fam == Family::Gplus)) {
        // Anticommutator is symmetric; write it with r the G^+ index.
        const Rational& r = (a.fam == Family::Gplus) ? m : n;
        const Rational& s = (a.fam == Family::Gplus) ? n : m;
        out.add(gen_L(r + s), Scalar(2));
        out.add(gen_J(r + s), Scalar(r - s));
        if ((r + s).is_zero())
            out.add(gen_central(), Scalar((r * r - Rational(1, 4)) * Rational(1, 3)));
        return out;
    }
    if (a.fam == b.fam && (a.fam == Family::Gplus || a.fam == Family::Gminus)) {
        return out; // [G^+,G^+] = [G^-,G^-] = 0
    }
    if ((a.fam == Family::Gplus || a.fam == Family::Gminus) && b.fam == Family::J) {
        Scalar sign = (a.fam == Family::Gplus) ? Scalar(-1) : Scalar(1);
        out.add({a.fam, m + n}, sign);
        return out;
    }
    if (a.fam == Family::J && (b.fam == Family::Gplus || b.fam == Family::Gminus)) {
        return Scalar(-1) * bracket(b, a, t);
    }
    throw std::logic_error("bracket: unhandled generator pair");
}

AlgebraElement bracket_elem(const AlgebraElement& x, const AlgebraElement& y, const Rational& t) {
    AlgebraElement out;
    for (const auto& [g, cg] : x.terms())
        for (const auto& [h, ch] : y.terms())
            out = out + (cg * ch) * bracket(g, h, t);
    return out;
}

GeneratorId adjoint_gen(const GeneratorId& g) {
    switch (g.fam) {
        case Family::Central: return g;
        case Family::L: return gen_L(-g.idx);
        case Family::J: return gen_J(-g.idx);
        case Family::Gplus: return gen_Gm(-g.idx);
        case Family::Gminus: return gen_Gp(-g.idx);
    }
    return g;
}

AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, s] : x.terms())
        out.add(adjoint_gen(g), s.conj());
    return out;
}

AlgebraElement flow(const Rational& t, const GeneratorId& g) {
    require_valid(g, t);
    AlgebraElement out;
    switch (g.fam) {
        case Family::Central:
            out.add(g, Scalar(1));
            break;
        case Family::L:
            out.add(gen_L(g.idx), Scalar(1));
            out.add(gen_J(g.idx), Scalar(t));
            if (g.idx.is_zero())
                out.add(gen_central(), Scalar(t * t * Rational(1, 6)));
            break;
        case Family::J:
            out.add(gen_J(g.idx), Scalar(1));
            if (g.idx.is_zero())
                out.add(gen_central(), Scalar(t * Rational(1, 3)));
            break;
        case Family::Gplus:
            out.add(gen_Gp(g.idx + t), Scalar(1));
            break;
        case Family::Gminus:
            out.add(gen_Gm(g.idx - t), Scalar(1));
            break;
    }
    return out;
}

AlgebraElement flow_elem(const Rational& t, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, s] : x.terms())
        out = out + s * flow(t, g);
    return out;
}

AlgebraElement flow_inverse(const Rational& t, const GeneratorId& g) {
    require_valid(g, Rational(0));
    AlgebraElement out;
    switch (g.fam) {
        case Family::Central:
            out.add(g, Scalar(1));
            break;
        case Family::L:
            out.add(gen_L(g.idx), Scalar(1));
            out.add(gen_J(g.idx), Scalar(-t));
            if (g.idx.is_zero())
                out.add(gen_central(), Scalar(t * t * Rational(1, 6)));
            break;
        case Family::J:
            out.add(gen_J(g.idx), Scalar(1));
            if (g.idx.is_zero())
                out.add(gen_central(), Scalar(-(t * Rational(1, 3))));
            break;
        case Family::Gplus:
            out.add(gen_Gp(g.idx - t), Scalar(1));
            break;
        case Family::Gminus:
            out.add(gen_Gm(g.idx + t), Scalar(1));
            break;
    }
    return out;
}

AlgebraElement flow_inverse_elem(const Rational& t, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, s] : x.terms())
        out = out + s * flow_inverse(t, g);
    return out;
}

AlgebraElement jacobi_defect(const GeneratorId& a, const GeneratorId& b, const GeneratorId& c,
                             const Rational& t) {
    auto sign = [](const GeneratorId& x, const GeneratorId& y) {
        return (x.odd() && y.odd()) ? Scalar(-1) : Scalar(1);
    };
    AlgebraElement sum;
    sum = sum + sign(a, c) * bracket_elem(AlgebraElement(a), bracket(b, c, t), t);
    sum = sum + sign(b, a) * bracket_elem(AlgebraElement(b), bracket(c, a, t), t);
    sum = sum + sign(c, b) * bracket_elem(AlgebraElement(c), bracket(a, b, t), t);
    return sum;
}

AlgebraElement g1_combo(const Rational& r) {
    // 1/sqrt2 = sqrt2/2
    Scalar inv_sqrt2(Rational(0), Rational(1, 2), Rational(0), Rational(0));
    AlgebraElement out;
    out.add(gen_Gp(r), inv_sqrt2);
    out.add(gen_Gm(r), inv_sqrt2);
    return out;
}

AlgebraElement g2_combo(const Rational& r) {
    // -i/sqrt2 = -i*sqrt2/2
    Scalar coeff(Rational(0), Rational(0), Rational(0), Rational(-1, 2));
    AlgebraElement out;
    out.add(gen_Gp(r), coeff);
    out.add(gen_Gm(r), -coeff);
    return out;
}

} // namespace svir
