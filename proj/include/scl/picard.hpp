#ifndef SCL_PICARD_HPP
#define SCL_PICARD_HPP

#include <cmath>

#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/f128.hpp"
#include "scl/gamma.hpp"
#include "scl/quadrature.hpp"

namespace scl {

// F_{b,a}(s) = int_0^1 cos(b log t) t^{s/2-1} (a t + (1-t)^2/2)^{-s/2} dt.
// a = 2 and a = 0 admit gamma closed forms; general a >= 0 goes through the
// cosh representation int_0^inf cos(bu) (a - 1 + cosh u)^{-s/2} du.
struct PicardSpec {
    double b = 0.0;
    double a = 2.0;
    cplx s{1.0, 0.0};

    void validate() const {
        if (!(s.real() > 0.0)) throw Error("PicardSpec: requires Re(s) > 0");
        if (!(a >= 0.0)) throw Error("PicardSpec: requires a >= 0");
        if (!std::isfinite(b)) throw Error("PicardSpec: b must be finite");
    }
};

// 2^{s/2-1} Gamma(s/2+ib) Gamma(s/2-ib) / Gamma(s)
inline cplx picard_closed_a2(double b, const cplx& s) {
    if (!(s.real() > 0.0)) throw Error("picard_F: requires Re(s) > 0");
    const cplx h = 0.5 * s;
    return std::exp((h - 1.0) * std::log(2.0) + log_gamma(h + cplx(0.0, b)) +
                    log_gamma(h - cplx(0.0, b)) - log_gamma(s));
}

// cos(i pi b)/cos(pi s/2) * F_{b,2}(s); rejects s at poles of sec(pi s / 2)
inline cplx picard_closed_a0(double b, const cplx& s) {
    const cplx cs = std::cos(pi * s / 2.0);
    if (std::abs(cs) < 1e-10)
        throw Error("picard_F: a = 0 closed form is singular at this s");
    return std::cosh(pi * b) / cs * picard_closed_a2(b, s);
}

// Both integral representations run in quad precision: for b of eigenvalue
// size the value sits ~e^{-pi b} below the integrand scale, far past what
// double-precision cancellation can resolve.

// defining Euler-type integral over (0,1); for a = 0 needs Re(s) < 1
inline cplx picard_integral_unit(double b, double a, const cplx& s,
                                 const QuadratureSpec& quad) {
    quad.validate();
    if (!(s.real() > 0.0)) throw Error("picard_F: requires Re(s) > 0");
    if (a == 0.0 && !(s.real() < 1.0))
        throw Error("picard_F: unit-interval integral for a = 0 needs Re(s) < 1");
    using qd::f128;
    const f128 bq = b, aq = a, sr = s.real(), si = s.imag();
    auto f = [&](f128 t) -> qd::c128 {
        const f128 lt = logq(t);
        const f128 omt = 1 - t;
        const f128 base = aq * t + omt * omt / 2;
        const f128 lb = logq(base);
        const f128 mag = expq((sr / 2 - 1) * lt - sr / 2 * lb) * cosq(bq * lt);
        const f128 phase = si / 2 * lt - si / 2 * lb;
        return {mag * cosq(phase), mag * sinq(phase)};
    };
    return qd::to_cplx(qd::tanh_sinh_q(f, 0.0q, 1.0q));
}

// cosh representation over (0, cutoff); cutoff <= 0 selects one from tol
inline cplx picard_integral_cosh(double b, double a, const cplx& s,
                                 const QuadratureSpec& quad) {
    quad.validate();
    const double sigma = s.real();
    if (!(sigma > 0.0)) throw Error("picard_F: requires Re(s) > 0");
    if (a == 0.0 && !(sigma < 1.0))
        throw Error("picard_F: cosh integral for a = 0 needs Re(s) < 1");
    double cut = quad.cutoff;
    if (cut <= 0.0)
        cut = 2.0 * (std::log(1.0 / quad.tol) + 50.0) / sigma + 8.0;
    using qd::f128;
    const f128 bq = b, aq = a, sr = s.real(), si = s.imag();
    auto f = [&](f128 u) -> qd::c128 {
        const f128 sh = sinhq(u / 2);
        const f128 lb = logq(aq + 2 * sh * sh); // a - 1 + cosh u, stable at 0
        const f128 mag = expq(-sr / 2 * lb) * cosq(bq * u);
        const f128 phase = -si / 2 * lb;
        return {mag * cosq(phase), mag * sinq(phase)};
    };
    // tanh-sinh near the (possibly singular) origin, panel GL for the long
    // oscillatory range; the head/tail cancellation only survives if the sum
    // stays in quad precision
    const double split = std::min(2.0, cut);
    qd::c128 total = qd::tanh_sinh_q(f, 0.0q, f128(split));
    if (cut > split) {
        const int panels =
            std::max(quad.panels,
                     int(std::ceil(1.6 * std::abs(b) * (cut - split) / (2.0 * pi))) + 10);
        total += qd::gl_panels_q(f, f128(split), f128(cut), panels);
    }
    return qd::to_cplx(total);
}

inline cplx picard_F(const PicardSpec& spec, const QuadratureSpec& quad) {
    spec.validate();
    if (spec.a == 2.0) return picard_closed_a2(spec.b, spec.s);
    if (spec.a == 0.0) return picard_closed_a0(spec.b, spec.s);
    return picard_integral_cosh(spec.b, spec.a, spec.s, quad);
}

} // namespace scl

#endif
