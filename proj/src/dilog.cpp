#include "posrep/dilog.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace posrep {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

// integrand on the line t = s + i*height, in a form that neither overflows nor cancels
struct Integrand {
    double b, Q, height;
    cplx z;
    cplx operator()(double s) const {
        cplx t(s, height);
        if (s <= 0) return std::exp(pi * t * z) / ((std::exp(pi * b * t) - 1.0) * (std::exp(pi * t / b) - 1.0) * t);
        return std::exp(pi * t * (z - Q)) / ((1.0 - std::exp(-pi * b * t)) * (1.0 - std::exp(-pi * t / b)) * t);
    }
};

double gsl_part(const std::function<double(double)>& f, double tol) {
    gsl_function F;
    F.function = [](double x, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(x); };
    F.params = const_cast<std::function<double(double)>*>(&f);
    gsl_integration_workspace* w = gsl_integration_workspace_alloc(2000);
    double result = 0, err = 0;
    int status = gsl_integration_qagi(&F, tol * 1e-2, tol, 2000, w, &result, &err);
    gsl_integration_workspace_free(w);
    if (status != GSL_SUCCESS && err > tol)
        throw DilogError(std::string("Gauss-Kronrod did not converge: ") + gsl_strerror(status) +
                         ", error estimate " + std::to_string(err));
    return result;
}

cplx gauss_kronrod(const Integrand& h, double tol) {
    static const bool off = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)off;
    double re = gsl_part([&](double s) { return h(s).real(); }, tol);
    double im = gsl_part([&](double s) { return h(s).imag(); }, tol);
    return {re, im};
}

cplx tanh_sinh(const Integrand& h, double tol) {
    boost::math::quadrature::sinh_sinh<double> q(15);
    double err_re = 0, err_im = 0;
    double re = q.integrate([&](double s) { return h(s).real(); }, tol, &err_re);
    double im = q.integrate([&](double s) { return h(s).imag(); }, tol, &err_im);
    if (err_re > 1e3 * tol || err_im > 1e3 * tol)
        throw DilogError("tanh-sinh did not converge, error estimate " + std::to_string(std::max(err_re, err_im)));
    return {re, im};
}

cplx trapezoid(const Integrand& h, double tol) {
    // the integrand decays like exp(-pi min(Re z, Q - Re z) |s|)
    double rate = pi * std::min(h.z.real(), h.Q - h.z.real());
    double S = (std::log(1 / tol) + 10) / rate;
    auto sum = [&](double step) {
        cplx acc = h(0);
        for (double s = step; s <= S; s += step) acc += h(s) + h(-s);
        return acc * step;
    };
    double step = 0.25;
    cplx prev = sum(step);
    for (int k = 0; k < 12; ++k) {
        step /= 2;
        cplx next = sum(step);
        if (std::abs(next - prev) < tol) return next;
        prev = next;
    }
    throw DilogError("trapezoid rule did not stabilise at step " + std::to_string(step));
}

}  // namespace

cplx zeta_b(double b) { return std::exp(I * (pi / 2) * ((b * b + 1 / (b * b)) / 6 + 0.5)); }

cplx dilog_exponent(const DilogParams& p, cplx z) {
    if (!(p.b > 0) || !std::isfinite(p.b)) throw DilogError("b must be positive");
    double Q = p.Q();
    if (!(z.real() > 0 && z.real() < Q)) throw DilogError("z outside the strip 0 < Re z < Q");
    double lim = 2 * std::min(p.b, 1 / p.b);
    double height = p.height > 0 ? p.height : lim / 2;
    if (height >= lim) throw DilogError("contour height must stay below the first pole 2i*min(b, 1/b)");
    Integrand h{p.b, Q, height, z};
    switch (p.scheme) {
        case Quadrature::GaussKronrod: return gauss_kronrod(h, p.tol);
        case Quadrature::TanhSinh: return tanh_sinh(h, p.tol);
        case Quadrature::Trapezoid: return trapezoid(h, p.tol);
    }
    throw DilogError("unknown quadrature");
}

cplx G_b(const DilogParams& p, cplx z) { return std::conj(zeta_b(p.b)) * std::exp(-dilog_exponent(p, z)); }

cplx g_b(const DilogParams& p, double x) {
    if (!(x > 0)) throw DilogError("g_b needs x > 0");
    cplx z = p.Q() / 2 + std::log(x) / (2 * pi * I * p.b);
    return std::conj(zeta_b(p.b)) / G_b(p, z);
}

std::vector<UnitaritySample> unitarity_scan(const DilogParams& p, double lo, double hi, int n) {
    std::vector<UnitaritySample> out;
    for (int i = 0; i < n; ++i) {
        double x = n == 1 ? lo : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
        out.push_back({p.b, x, std::abs(g_b(p, x))});
    }
    return out;
}

}  // namespace posrep
