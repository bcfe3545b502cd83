#pragma once
#include <complex>
#include <stdexcept>
#include <vector>

namespace posrep {

using cplx = std::complex<double>;

struct DilogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Quadrature {
    GaussKronrod,  // adaptive, infinite interval
    TanhSinh,      // double exponential, infinite interval
    Trapezoid,     // uniform step, halved until stable
};

struct DilogParams {
    double b = 0.5;
    double tol = 1e-12;
    // height of the horizontal contour above the real axis; 0 picks min(b, 1/b)
    double height = 0;
    Quadrature scheme = Quadrature::GaussKronrod;
    double Q() const { return b + 1 / b; }
};

cplx zeta_b(double b);
// the contour integral in the exponent of G_b, for 0 < Re z < Q
cplx dilog_exponent(const DilogParams& p, cplx z);
cplx G_b(const DilogParams& p, cplx z);
// x > 0, principal log
cplx g_b(const DilogParams& p, double x);

struct UnitaritySample {
    double b, x, modulus;
};
// |g_b(x)| on n log-spaced points of [lo, hi]
std::vector<UnitaritySample> unitarity_scan(const DilogParams& p, double lo, double hi, int n);

}  // namespace posrep
