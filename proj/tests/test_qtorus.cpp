#include <random>

#include "posrep/qtorus.hpp"
#include "test_main.hpp"

using namespace posrep;

namespace {
std::shared_ptr<SymbolTable> table() {
    auto T = std::make_shared<SymbolTable>(2);
    T->add_position("x", 1);
    T->add_position("y", 2);
    T->add_position("z", 2);
    T->add_parameter("l1", 2);
    return T;
}
ExpVec random_exp(const SymbolTable& T, std::mt19937& g) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<ExpEntry> e;
    for (int s = 0; s < T.size(); ++s) e.push_back({s, Rational(c(g)), Rational(c(g))});
    return ExpVec(e);
}
Expr random_expr(const TablePtr& T, std::mt19937& g) {
    Expr e(T);
    std::uniform_int_distribution<int> n(1, 3);
    for (int i = n(g); i > 0; --i) e.add(random_exp(*T, g), Scalar::integer(n(g)) * q_power(Rational(n(g), 2)));
    return e;
}
}  // namespace

TEST_CASE("pairing examples") {
    auto T = table();
    ExpVec v = make_exp(*T, {{"x", 2}}), w = make_exp(*T, {{"p_x", 2}});
    CHECK(pairing(*T, v, w) == Triple{0, 4, 0});
    CHECK(pairing(*T, w, v) == Triple{0, -4, 0});
    CHECK(pairing(*T, make_exp(*T, {{"x", 1}}), make_exp(*T, {{"y", 3}})) == Triple{});
    CHECK(pairing(*T, make_exp(*T, {{"x", 1}}), make_exp(*T, {}, {{"p_x", 2}})) == Triple{2, 0, 0});
    // parameters pair with nothing
    CHECK(pairing(*T, make_exp(*T, {{"l1", 1}}), make_exp(*T, {{"p_y", 1}, {"y", 1}})) == Triple{});
}

TEST_CASE("uv = q^2 vu anchor") {
    auto T = table();
    Expr u = Expr::monomial(T, make_exp(*T, {{"x", 2}}));
    Expr v = Expr::monomial(T, make_exp(*T, {{"p_x", 2}}));
    CHECK(u * v == (v * u) * q_power(2));
    CHECK(q_commutator(v, u, q_power(2)).is_zero());
    CHECK_FALSE(q_commutator(u, v, q_power(2)).is_zero());
    // short scale: q_s^2 = q
    Expr us = Expr::monomial(T, make_exp(*T, {{"y", 2}}));
    Expr vs = Expr::monomial(T, make_exp(*T, {{"p_y", 2}}));
    CHECK(us * vs == (vs * us) * q_power(1));
    // dual slots: u~ v~ = q~^2 v~ u~ at the short scale
    Expr ut = Expr::monomial(T, make_exp(*T, {}, {{"y", 2}}));
    Expr vt = Expr::monomial(T, make_exp(*T, {}, {{"p_y", 2}}));
    CHECK(ut * vt == (vt * ut) * q_power(0, 2));
}

TEST_CASE("inverse pair and commuting family") {
    auto T = table();
    ExpVec v = make_exp(*T, {{"x", 1}, {"p_y", 3}}, {{"z", 1}});
    CHECK(Expr::monomial(T, v) * Expr::monomial(T, -v) == Expr::one(T));
    Expr a = Expr::monomial(T, make_exp(*T, {{"x", 1}, {"y", 2}}));
    Expr b = Expr::monomial(T, make_exp(*T, {{"x", -3}, {"z", 1}}));
    CHECK(commutator(a, b).is_zero());
}

TEST_CASE("associativity, exchange law, linearity") {
    auto T = table();
    std::mt19937 g(11);
    for (int i = 0; i < 500; ++i) {
        ExpVec a = random_exp(*T, g), b = random_exp(*T, g), c = random_exp(*T, g);
        Expr A = Expr::monomial(T, a), B = Expr::monomial(T, b), C = Expr::monomial(T, c);
        CHECK((A * B) * C == A * (B * C));
        Triple p = pairing(*T, a, b);
        CHECK(A * B == (B * A) * Scalar::monomial(scaled_phase(p, Rational(1, 2))));
    }
    for (int i = 0; i < 100; ++i) {
        Expr a = random_expr(T, g), b = random_expr(T, g), c = random_expr(T, g);
        CHECK(((a + b) * c - a * c - b * c).is_zero());
    }
}

TEST_CASE("star is an involutive homomorphism onto the dual table") {
    auto T = table();
    TablePtr D = T->dual();
    TablePtr DD = D->dual();
    CHECK(DD->same_as(*T));
    std::mt19937 g(5);
    for (int i = 0; i < 100; ++i) {
        Expr a = random_expr(T, g), b = random_expr(T, g);
        CHECK(substitute_b_inverse(a * b, D) == substitute_b_inverse(a, D) * substitute_b_inverse(b, D));
        CHECK(substitute_b_inverse(substitute_b_inverse(a, D), DD) == a);
    }
}

TEST_CASE("brackets and serre degenerate case") {
    auto T = table();
    Expr e = bracket(T, {{"x", 1}}, {{"x", -1}});
    CHECK(e.size() == 2);
    CHECK(e.terms().count(make_exp(*T, {{"x", 1}, {"p_x", -2}})) == 1);
    Expr f = bracket(T, {{"y", 1}, {"x", 1}}, {{"y", 1}});
    CHECK(serre_sum(e, f, 0, Phase(0, 1, 0)) == commutator(e, f));
}

TEST_CASE("substitute relabels with scale awareness") {
    auto T = table();
    auto U = std::make_shared<SymbolTable>(2);
    U->add_position("x", 2);
    U->add_position("y", 1);
    U->add_position("z", 2);
    U->add_parameter("l1", 2);
    SubstMap m{{T->index("x"), {{U->index("y"), 1}}}, {T->index("y"), {{U->index("x"), 1}}}};
    Expr a = Expr::monomial(T, make_exp(*T, {{"x", 1}}, {{"x", 1}}));
    Expr b = substitute(a, U, m);
    CHECK(b == Expr::monomial(U, make_exp(*U, {{"y", 1}}, {{"y", 1}})));
    Expr c = Expr::monomial(T, make_exp(*T, {}, {{"y", 1}}));
    CHECK(substitute(c, U, m) == Expr::monomial(U, make_exp(*U, {}, {{"x", 1}})));
}
