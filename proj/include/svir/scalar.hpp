#pragma once

#include "svir/rational.hpp"

#include <stdexcept>
#include <string>

namespace svir {

// Element of Q(i, sqrt2), stored as a + b*sqrt2 + c*i + d*i*sqrt2.
struct Scalar {
    Rational a, b, c, d;

    Scalar() = default;
    Scalar(Rational re) : a(std::move(re)) {}
    Scalar(long re) : a(re) {}
    Scalar(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

    Rational to_rational() const {
        if (!is_rational())
            throw std::domain_error("Scalar: not rational: " + str());
        return a;
    }

    // Complex conjugation: negates the imaginary coordinates.
    Scalar conj() const { return Scalar(a, b, -c, -d); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return Scalar(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return Scalar(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
    }
    Scalar operator-() const { return Scalar(-a, -b, -c, -d); }

    // (sqrt2)^2 = 2, i^2 = -1, generators commute.
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return Scalar(
            x.a * y.a + 2 * (x.b * y.b) - x.c * y.c - 2 * (x.d * y.d),
            x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
            x.a * y.c + x.c * y.a + 2 * (x.b * y.d) + 2 * (x.d * y.b),
            x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
    }

    Scalar inverse() const {
        if (is_zero())
            throw std::domain_error("Scalar: inverse of zero");
        // z * conj(z) lies in Q(sqrt2); multiply by its sqrt2-conjugate to reach Q.
        Scalar zbar = conj();
        Scalar w = (*this) * zbar; // w = p + q*sqrt2, c = d = 0
        Rational p = w.a, q = w.b;
        Rational norm = p * p - 2 * (q * q);
        Scalar wconj(p, -q, Rational(0), Rational(0));
        Scalar num = zbar * wconj;
        Rational inv = Rational(1) / norm;
        return Scalar(num.a * inv, num.b * inv, num.c * inv, num.d * inv);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        auto append = [&out](const Rational& r, const char* unit) {
            if (r.is_zero())
                return;
            if (!out.empty() && r.sgn() > 0)
                out += "+";
            if (*unit == '\0') {
                out += r.str();
            } else if (r == Rational(1)) {
                out += unit;
            } else if (r == Rational(-1)) {
                out += "-";
                out += unit;
            } else {
                out += r.str();
                out += "*";
                out += unit;
            }
        };
        append(a, "");
        append(b, "sqrt2");
        append(c, "i");
        append(d, "i*sqrt2");
        return out;
    }
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

// exp(2*pi*i*x) for rational x, kept as the exponent reduced mod 1 into [0,1).
class Phase {
  public:
    Phase() : e_(0) {}

    static Phase from_exponent(const Rational& x) { return Phase(x - x.floor()); }

    const Rational& exponent() const { return e_; }
    bool is_one() const { return e_.is_zero(); }
    bool is_minus_one() const { return e_ == Rational(1, 2); }

    friend Phase operator*(const Phase& x, const Phase& y) {
        return from_exponent(x.e_ + y.e_);
    }
    Phase pow(long k) const { return from_exponent(e_ * Rational(k)); }
    Phase inverse() const { return from_exponent(-e_); }

    friend bool operator==(const Phase& x, const Phase& y) { return x.e_ == y.e_; }
    friend bool operator!=(const Phase& x, const Phase& y) { return x.e_ != y.e_; }

    // Short display form: the four roots of unity get their usual names.
    std::string str() const {
        if (e_.is_zero()) return "1";
        if (e_ == Rational(1, 2)) return "-1";
        if (e_ == Rational(1, 4)) return "i";
        if (e_ == Rational(3, 4)) return "-i";
        return "exp(2*pi*i*" + e_.str() + ")";
    }

  private:
    explicit Phase(Rational e) : e_(std::move(e)) {}
    Rational e_;
};

inline Phase phase_from_exponent(const Rational& x) { return Phase::from_exponent(x); }
inline bool phase_is_one(const Phase& p) { return p.is_one(); }
inline Phase phase_pow(const Phase& p, long k) { return p.pow(k); }

} // namespace svir
