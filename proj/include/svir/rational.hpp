#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace svir {

// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v, already_canonical{});
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    // True when 2x is an integer but x is not.
    bool is_strict_half_integer() const { return v_.get_den() == 2; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not representable as long: " + str());
        return v_.get_num().get_si();
    }

    Rational floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return Rational(mpq_class(q), already_canonical{});
    }

    Rational abs() const { return sgn() < 0 ? -*this : *this; }

    // Exact square root if the value is a square of a rational.
    static std::optional<Rational> exact_sqrt(const Rational& x) {
        if (x.sgn() < 0)
            return std::nullopt;
        const mpz_class& num = x.v_.get_num();
        const mpz_class& den = x.v_.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(mpq_class(rn, rd), already_canonical{});
    }

    double to_double() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_), already_canonical{});
    }
    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return v_; }

  private:
    struct already_canonical {};
    Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace svir
