#ifndef SCL_BESSEL_HPP
#define SCL_BESSEL_HPP

#include <cmath>
#include <complex>

#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/gamma.hpp"
#include "scl/quadrature.hpp"

namespace scl {

namespace detail {

using cplxl = std::complex<long double>;

// Ascending-series route for Kt(r,x) = e^{pi r/2} K_{ir}(x).
// K_{ir}(x) = -(pi / sinh(pi r)) Im I_{ir}(x); accumulation in long double
// keeps the Im-extraction loss harmless up to x ~ r + 2.
inline double kt_series(double r, double x) {
    const cplx g0d = std::exp(-log_gamma(cplx(1.0, r)));
    cplxl g(g0d.real(), g0d.imag());
    const cplxl ir(0.0L, (long double)r);
    const long double q = (long double)x * (long double)x / 4.0L;
    long double w = 1.0L;
    cplxl s = g;
    long double smax = std::abs(s);
    for (int m = 1; m < 600; ++m) {
        g /= (cplxl((long double)m) + ir);
        w *= q / m;
        const cplxl term = w * g;
        s += term;
        const long double as = std::abs(s);
        if (as > smax) smax = as;
        if (std::abs(term) < 1e-24L * smax && m > 3 && (long double)m > q / m) break;
    }
    const cplxl phase = std::exp(ir * std::log((long double)x / 2.0L));
    const long double im = std::imag(phase * s);
    const long double pr = (long double)pi * (long double)r;
    const long double pref =
        2.0L * (long double)pi * std::exp(-pr / 2.0L) / (1.0L - std::exp(-2.0L * pr));
    return (double)(-pref * im);
}

// Damped-cosine route: e^{pi r/2} int_0^Tc exp(-x cosh t) cos(rt) dt,
// composite Gauss-Legendre in long double.
inline double kt_quad(double r, double x) {
    const long double xl = x, rl = r;
    const double top = (pi * r / 2.0 + 60.0) / x;
    const double tc = top > 1.0 ? std::acosh(top) : 1.0;
    const double cycles = r * tc / (2.0 * pi);
    const int panels = std::max(8, int(std::ceil(1.4 * cycles)) + 8);
    const auto& tab = gl16();
    const long double pref = (long double)pi * rl / 2.0L;
    long double total = 0.0L;
    const long double w = (long double)tc / panels;
    for (int p = 0; p < panels; ++p) {
        const long double mid = (p + 0.5L) * w;
        long double acc = 0.0L;
        for (int i = 0; i < 16; ++i) {
            const long double t = mid + 0.5L * w * (long double)tab[0][i];
            acc += (long double)tab[1][i] * std::exp(pref - xl * std::cosh(t)) * std::cos(rl * t);
        }
        total += acc * 0.5L * w;
    }
    return (double)total;
}

} // namespace detail

// Scaled K-Bessel of imaginary order: e^{pi r/2} K_{ir}(x), r >= 0, x > 0.
inline double bessel_k_imag_scaled(double r, double x) {
    if (!(x > 0.0)) throw Error("bessel_k_imag_order: requires x > 0");
    if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(x))
        throw Error("bessel_k_imag_order: bad order/argument");
    if (x >= 700.0)
        return std::sqrt(pi / (2.0 * x)) * std::exp(pi * r / 2.0 - x);
    if (r > 8.0 && x < r + 2.0) return detail::kt_series(r, x);
    return detail::kt_quad(r, x);
}

// True when the requested point sits outside the double-precision comfort
// zone of the two evaluation routes.
inline bool bessel_k_accuracy_loss(double r, double x) {
    return x < 1e-3 && r > 30.0;
}

inline double bessel_k_imag_order(double r, double x, bool scaled = false) {
    const double kt = bessel_k_imag_scaled(r, x);
    return scaled ? kt : kt * std::exp(-pi * r / 2.0);
}

// real-order modified Bessel K_nu(x) (Eisenstein series off the critical line)
inline double bessel_k_real_order(double nu, double x) {
    if (!(x > 0.0)) throw Error("bessel_k_real_order: requires x > 0");
    return std::cyl_bessel_k(std::abs(nu), x);
}

} // namespace scl

#endif
