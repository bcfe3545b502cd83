#include <random>

#include "posrep/scalar.hpp"
#include "test_main.hpp"

using namespace posrep;

namespace {
Scalar random_scalar(std::mt19937& g) {
    std::uniform_int_distribution<int> n(0, 3), num(-6, 6), den(1, 3), c(-3, 3);
    Scalar s;
    for (int i = n(g); i > 0; --i)
        s += Scalar::monomial(Phase(Rational(num(g), den(g)), Rational(num(g), den(g)), Rational(num(g), den(g))), c(g));
    return s;
}
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -3) == Rational(1, 3));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(5, 2).mod(2) == Rational(1, 2));
    CHECK(Rational(-1, 2).mod(2) == Rational(3, 2));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("q_power") {
    CHECK(q_power(1) == Scalar::monomial(Phase(0, 1, 0)));
    CHECK(q_power(0).is_one());
    CHECK(q_power(Rational(-1, 2)).terms()[0].first.s == Rational(-1, 2));
}

TEST_CASE("q_integer") {
    CHECK(q_integer(1, 1).is_one());
    CHECK(q_integer(2, Rational(1, 2)) == q_power(Rational(1, 2)) + q_power(Rational(-1, 2)));
    Scalar lhs = q_integer(2, 1) * (q_power(1) - q_power(-1));
    CHECK(lhs == q_power(2) - q_power(-2));
    for (int n = 0; n <= 8; ++n)
        for (Rational d : {Rational(1), Rational(1, 2), Rational(1, 3)})
            CHECK(q_integer(n, d) * (q_power(d) - q_power(-d)) == q_power(Rational(n) * d) - q_power(Rational(-n) * d));
}

TEST_CASE("ring operations") {
    CHECK((q_power(1) + (-q_power(1))).is_zero());
    CHECK(Scalar::monomial(Phase(2, 0, 0)).is_one());
    Scalar sign = Scalar::monomial(Phase(1, 0, 0));
    CHECK((sign * sign).is_one());
    Scalar qs = q_power(Rational(1, 2)) + q_power(Rational(-1, 2));
    CHECK(qs * qs == q_power(1) + Scalar::integer(2) + q_power(-1));
    CHECK(Scalar().is_zero());
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937 g(7);
    for (int i = 0; i < 1000; ++i) {
        Scalar x = random_scalar(g), y = random_scalar(g), z = random_scalar(g);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x + (-x)).is_zero());
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("q binomial") {
    CHECK(q_binomial(2, 1, 1) == q_integer(2, 1));
    CHECK(q_binomial(4, 2, 1) * q_integer(2, 1) * q_integer(2, 1) == q_factorial(4, 1));
    CHECK(q_binomial(3, 1, Rational(1, 3)) == q_integer(3, Rational(1, 3)));
}

TEST_CASE("slot swap and rendering") {
    CHECK(q_power(1, 2).swap_slots() == q_power(2, 1));
    CHECK(qt_integer(2, 1) == q_power(0, 1) + q_power(0, -1));
    Scalar s = Scalar::monomial(Phase(Rational(1, 2), Rational(3, 2), -1), 3);
    CHECK(s.str() == "3·e^{iπ·1/2}·q^{3/2}·q̃^{-1}");
}
