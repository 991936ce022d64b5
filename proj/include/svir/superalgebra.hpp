#pragma once

#include "svir/rational.hpp"
#include "svir/scalar.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace svir {

// Generator families of the N=2 super-Virasoro algebra family SVir^{N=2,t}:
// even L_n, J_n and the central element, odd G^+_r, G^-_r.
enum class Family { Central, L, J, Gplus, Gminus };

inline const char* family_tag(Family f) {
    switch (f) {
        case Family::Central: return "C";
        case Family::L: return "L";
        case Family::J: return "J";
        case Family::Gplus: return "G+";
        case Family::Gminus: return "G-";
    }
    return "?";
}

Family family_from_tag(const std::string& tag);

struct GeneratorId {
    Family fam = Family::Central;
    Rational idx; // mode number; 0 for Central

    GeneratorId() = default;
    GeneratorId(Family f, Rational i) : fam(f), idx(std::move(i)) {}

    bool odd() const { return fam == Family::Gplus || fam == Family::Gminus; }

    friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
        return a.fam == b.fam && a.idx == b.idx;
    }
    friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
        if (a.fam != b.fam)
            return static_cast<int>(a.fam) <=> static_cast<int>(b.fam);
        return a.idx <=> b.idx;
    }

    std::string str() const {
        if (fam == Family::Central)
            return "c^";
        return std::string(family_tag(fam)) + "_{" + idx.str() + "}";
    }
};

inline GeneratorId gen_L(Rational n) { return {Family::L, std::move(n)}; }
inline GeneratorId gen_J(Rational n) { return {Family::J, std::move(n)}; }
inline GeneratorId gen_Gp(Rational r) { return {Family::Gplus, std::move(r)}; }
inline GeneratorId gen_Gm(Rational r) { return {Family::Gminus, std::move(r)}; }
inline GeneratorId gen_central() { return {Family::Central, Rational(0)}; }

// Finite linear combination of generators with Q(i,sqrt2) coefficients.
// Zero coefficients are never stored.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(const GeneratorId& g, Scalar coeff = Scalar(1)) {
        add(g, std::move(coeff));
    }

    void add(const GeneratorId& g, const Scalar& coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<GeneratorId, Scalar>& terms() const { return terms_; }

    Scalar coeff(const GeneratorId& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement out = x;
        for (const auto& [g, s] : y.terms_)
            out.add(g, s);
        return out;
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement out = x;
        for (const auto& [g, s] : y.terms_)
            out.add(g, -s);
        return out;
    }
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
        AlgebraElement out;
        for (const auto& [g, t] : x.terms_)
            out.add(g, s * t);
        return out;
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [g, s] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + s.str() + ")" + (g.fam == Family::Central ? "c^" : g.str());
        }
        return out;
    }

  private:
    std::map<GeneratorId, Scalar> terms_;
};

// Mode-index lattice of SVir^{N=2,t}: L_n, J_n integer; G^+_r in 1/2-t+Z,
// G^-_r in 1/2+t+Z.
bool generator_valid(const GeneratorId& g, const Rational& t);

// Super-bracket [a,b] of two generators of SVir^{N=2,t}: anticommutator when
// both are odd, commutator otherwise. Throws std::domain_error on generators
// that do not live in the algebra with flow parameter t.
AlgebraElement bracket(const GeneratorId& a, const GeneratorId& b, const Rational& t);

// Bilinear extension of the super-bracket.
AlgebraElement bracket_elem(const AlgebraElement& x, const AlgebraElement& y, const Rational& t);

// Anti-linear involution: L_n -> L_{-n}, J_n -> J_{-n}, G^+-_r -> G^-+_{-r}.
GeneratorId adjoint_gen(const GeneratorId& g);
AlgebraElement adjoint(const AlgebraElement& x);

// Spectral flow eta_t : SVir^{N=2,t} -> SVir^{N=2,0} and its inverse
// eta'_t : SVir^{N=2,0} -> SVir^{N=2,t}.
AlgebraElement flow(const Rational& t, const GeneratorId& g);
AlgebraElement flow_elem(const Rational& t, const AlgebraElement& x);
AlgebraElement flow_inverse(const Rational& t, const GeneratorId& g);
AlgebraElement flow_inverse_elem(const Rational& t, const AlgebraElement& x);

// Graded Jacobi sum; zero iff the structure constants are consistent.
AlgebraElement jacobi_defect(const GeneratorId& a, const GeneratorId& b, const GeneratorId& c,
                             const Rational& t);

// The rotated supercharge basis: G^1_r = (G^+_r + G^-_r)/sqrt2,
// G^2_r = -i(G^+_r - G^-_r)/sqrt2.
AlgebraElement g1_combo(const Rational& r);
AlgebraElement g2_combo(const Rational& r);

} // namespace svir
