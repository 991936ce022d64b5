#include "svir/rational.hpp"
#include "svir/scalar.hpp"

#include <doctest.h>

using namespace svir;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational::parse("35/28") == Rational(5, 4));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(5, 4).str() == "5/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK(Rational(7, 2).floor() == Rational(3));
    CHECK(Rational::exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!Rational::exact_sqrt(Rational(2)).has_value());
    CHECK(!Rational::exact_sqrt(Rational(-4)).has_value());
}

TEST_CASE("phase reduction and powers") {
    CHECK(phase_from_exponent(Rational(0)).is_one());
    CHECK(phase_from_exponent(Rational(3, 2)).exponent() == Rational(1, 2));
    // (n(n+2)-(n+2)^2)/(4(n+2)) at n=5: (35-49)/28 = -1/2
    CHECK(phase_from_exponent(Rational(35 - 49, 28)).is_minus_one());
    CHECK(phase_pow(phase_from_exponent(Rational(1, 2)), 2).is_one());
    CHECK(phase_pow(phase_from_exponent(Rational(1, 4)), -1) ==
          phase_from_exponent(Rational(3, 4)));
    CHECK(phase_from_exponent(Rational(1, 4)).str() == "i");
}

TEST_CASE("scalar field operations in Q(i, sqrt2)") {
    Scalar one(1);
    Scalar r2 = Scalar::sqrt2();
    CHECK(r2 * r2 == Scalar(2));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((one + r2) * (one - r2) == Scalar(-1));
    // inverse(i*sqrt2) = -i*sqrt2/2
    Scalar x = Scalar::i_sqrt2();
    CHECK(x.inverse() == Scalar(Rational(0), Rational(0), Rational(0), Rational(-1, 2)));
    CHECK(x * x.inverse() == one);
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    Scalar z(Rational(1), Rational(2), Rational(-3), Rational(1, 2));
    CHECK(z * z.inverse() == one);
    CHECK(z.conj().conj() == z);
}
