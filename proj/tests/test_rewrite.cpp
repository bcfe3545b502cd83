#include "posrep/rewrite.hpp"
#include "test_main.hpp"

using namespace posrep;

TEST_CASE("B2 change of word") {
    for (std::string t : {"B2", "C2"}) {
        Presentation P = make_presentation(t, "1212");
        Presentation Q = phi_B2(P);
        Presentation R = make_presentation(t, "2121");
        CHECK(word_str(Q.word) == "2121");
        for (int i = 0; i < 2; ++i) {
            CHECK(Q.e[i] == R.e[i]);
            CHECK(Q.f[i] == R.f[i]);
            CHECK(Q.K[i] == R.K[i]);
        }
        Presentation S = phi_B2(Q);
        for (int i = 0; i < 2; ++i) {
            CHECK(S.e[i] == P.e[i]);
            CHECK(S.f[i] == P.f[i]);
        }
    }
}

TEST_CASE("single edge move maps f") {
    Presentation P = make_presentation("A2", "121");
    Presentation Q = make_presentation("A2", "212");
    for (int i = 0; i < 2; ++i) {
        CHECK(move_map(P, Q, 0, P.e[i]) == Q.e[i]);
        CHECK(move_map(P, Q, 0, P.f[i]) == Q.f[i]);
    }
}

TEST_CASE("division is exact or refused") {
    auto T = std::make_shared<SymbolTable>(1);
    T->add_position("x", 1);
    ExpVec X = make_exp(*T, {{"x", 1}});
    Expr Y = Expr::monomial(T, make_exp(*T, {{"p_x", 1}}));
    Expr f = Expr::one(T);
    f.add(X, Scalar::one());
    CHECK(divide_factor(Y * f, X, Scalar::one()) == Y);
    CHECK_THROWS_AS(divide_factor(Y, X, Scalar::one()), UnsupportedError);
}

TEST_CASE("exchange index") {
    auto T = std::make_shared<SymbolTable>(1);
    T->add_position("x", 1);
    ExpVec X = make_exp(*T, {{"x", 1}}), Y = make_exp(*T, {{"p_x", 4}});
    CHECK(exchange_index(*T, X, 1, Y) == 1);
    CHECK(exchange_index(*T, X, 1, -Y) == -1);
    CHECK_THROWS_AS(exchange_index(*T, X, 1, make_exp(*T, {{"p_x", 2}})), UnsupportedError);
}

TEST_CASE("Lusztig map") {
    Quad r = lusztig_phi({1, 1, 1, 1});
    CHECK(r == Quad{Rational(1, 3), Rational(9, 5), Rational(5, 3), Rational(1, 5)});
    Quad x{2, Rational(1, 3), 5, Rational(7, 2)};
    CHECK(lusztig_phi(lusztig_phi(x)) == x);
}

TEST_CASE("pinning identities") {
    PinningReport p = pinning_check(20, 7);
    CHECK(p.ek);
    CHECK(p.ef);
    CHECK(p.ekf);
    CHECK(p.ek2);
    CHECK(p.r121);
    CHECK(p.sp4);
    CHECK(p.g2);
}
