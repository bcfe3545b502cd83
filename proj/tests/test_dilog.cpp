#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "posrep/dilog.hpp"

using namespace posrep;

TEST_CASE("unitarity on the positive axis") {
    for (double b : {0.3, 0.7}) {
        DilogParams p;
        p.b = b;
        for (auto& s : unitarity_scan(p, 1e-3, 1e3, 41)) CHECK(std::abs(s.modulus - 1) < 1e-8);
    }
}

TEST_CASE("independent quadratures agree") {
    for (double b : {0.3, 0.5, 0.7}) {
        DilogParams gk, ts;
        gk.b = ts.b = b;
        ts.scheme = Quadrature::TanhSinh;
        double Q = gk.Q();
        for (double fr : {0.1, 0.3, 0.5, 0.7, 0.9})
            for (double im : {-1.0, 0.0, 0.5, 2.0}) {
                cplx z(fr * Q, im);
                CHECK(std::abs(dilog_exponent(gk, z) - dilog_exponent(ts, z)) < 1e-10);
            }
        CHECK(std::abs(G_b(gk, Q / 2) - G_b(ts, Q / 2)) < 1e-10);
    }
}

TEST_CASE("trapezoid halving matches") {
    DilogParams gk, tr;
    gk.b = tr.b = 0.6;
    tr.scheme = Quadrature::Trapezoid;
    tr.tol = 1e-11;
    cplx z(0.8, 0.3);
    CHECK(std::abs(G_b(gk, z) - G_b(tr, z)) < 1e-9);
}

TEST_CASE("contour height is immaterial below the first pole") {
    DilogParams a, c;
    a.b = c.b = 0.4;
    c.height = 0.2;
    cplx z(1.1, -0.4);
    CHECK(std::abs(dilog_exponent(a, z) - dilog_exponent(c, z)) < 1e-10);
}

TEST_CASE("symmetry under b -> 1/b") {
    for (double b : {0.3, 0.7}) {
        DilogParams p, d;
        p.b = b;
        d.b = 1 / b;
        double Q = p.Q();
        for (double fr : {0.2, 0.5, 0.8})
            for (double im : {-0.5, 0.0, 1.0}) {
                cplx z(fr * Q, im);
                CHECK(std::abs(G_b(p, z) - G_b(d, z)) < 1e-8);
            }
    }
}

TEST_CASE("g_b at a sample point and across a decade") {
    DilogParams gk, ts;
    gk.b = ts.b = 0.3;
    ts.scheme = Quadrature::TanhSinh;
    CHECK(std::abs(g_b(gk, 2.0) - g_b(ts, 2.0)) < 1e-10);
    cplx prev = g_b(gk, 1.0);
    for (int i = 1; i <= 50; ++i) {
        cplx cur = g_b(gk, std::pow(10.0, i / 50.0));
        CHECK(std::abs(cur - prev) < 0.2);
        prev = cur;
    }
}

TEST_CASE("difference equation G(z+b) = (1 - e^{2 pi i b z}) G(z)") {
    DilogParams p;
    p.b = 0.6;
    cplx z(0.4, 0.2);
    cplx lhs = G_b(p, z + p.b);
    cplx rhs = (1.0 - std::exp(cplx(0, 2 * M_PI * p.b) * z)) * G_b(p, z);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("domain errors") {
    DilogParams p;
    CHECK_THROWS_AS(G_b(p, cplx(0, 1)), DilogError);
    CHECK_THROWS_AS(G_b(p, cplx(p.Q(), 0)), DilogError);
    CHECK_THROWS_AS(g_b(p, -1), DilogError);
    p.b = -1;
    CHECK_THROWS_AS(G_b(p, cplx(1, 0)), DilogError);
}
