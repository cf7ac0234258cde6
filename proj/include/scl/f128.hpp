#ifndef SCL_F128_HPP
#define SCL_F128_HPP

// Quad-precision tanh-sinh core. Only the Picard integral representations
// need it: their values sit ~e^{-pi b} below the integrand scale, which is
// unreachable cancellation in double.

#include <quadmath.h>

#include <cmath>
#include <utility>

#include "scl/cplx.hpp"

namespace scl {
namespace qd {

using f128 = __float128;

struct c128 {
    f128 re{0}, im{0};
    c128() = default;
    c128(f128 r, f128 i) : re(r), im(i) {}
    c128& operator+=(const c128& o) { re += o.re; im += o.im; return *this; }
};

inline c128 scale(const c128& z, f128 w) { return {z.re * w, z.im * w}; }

inline cplx to_cplx(const c128& z) { return {double(z.re), double(z.im)}; }

// f(x) must return c128; integrable endpoint singularities allowed.
template <class F>
c128 tanh_sinh_q(F&& f, f128 a, f128 b, int levels = 11) {
    const f128 lam = M_PIq / 2;
    const f128 c = (a + b) / 2, d = (b - a) / 2;
    // far nodes still matter for endpoint singularities: cut where the
    // endpoint distance u ~ 2 e^{-2 lam sinh t} stops contributing at the
    // 1e-22 level even against t^{sigma/2-1} blowup with sigma ~ 0.5
    const f128 t_cut = 5.0q;
    f128 h = 1.0q;
    c128 sum = scale(f(c), lam);
    for (int level = 0; level <= levels; ++level) {
        const int stride = level == 0 ? 1 : 2;
        const int start = level == 0 ? 1 : 1;
        for (int k = start;; k += stride) {
            const f128 t = k * h;
            if (t > t_cut) break;
            const f128 sh = lam * sinhq(t);
            const f128 e = expq(-2 * sh);
            const f128 u = 2 * e / (1 + e);
            const f128 w = lam * coshq(t) * 4 * e / ((1 + e) * (1 + e));
            if (w < 1e-90q) break;
            // skip nodes whose abscissa rounds onto the endpoint itself
            const f128 xr = b - d * u, xl = a + d * u;
            if (xr != b) sum += scale(f(xr), w);
            if (xl != a) sum += scale(f(xl), w);
        }
        if (level < levels) h /= 2;
    }
    return scale(sum, d * h);
}

// 16-point Gauss-Legendre nodes refined to quad precision.
namespace detail_q {
inline void legendre_pd(f128 x, int n, f128& p, f128& dp) {
    f128 p0 = 1, p1 = 0;
    for (int j = 0; j < n; ++j) {
        const f128 p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
    }
    p = p0;
    dp = n * (x * p0 - p1) / (x * x - 1);
}
} // namespace detail_q

inline const std::pair<const f128*, const f128*>& gl16_q() {
    static const auto tab = [] {
        static f128 xs[16], ws[16];
        for (int i = 0; i < 16; ++i) {
            f128 x = cosq(M_PIq * (i + 0.75q) / 16.5q);
            f128 p, dp;
            for (int it = 0; it < 60; ++it) {
                detail_q::legendre_pd(x, 16, p, dp);
                const f128 dx = p / dp;
                x -= dx;
                if (fabsq(dx) < 1e-32q) break;
            }
            detail_q::legendre_pd(x, 16, p, dp);
            xs[i] = x;
            ws[i] = 2 / ((1 - x * x) * dp * dp);
        }
        return std::pair<const f128*, const f128*>(xs, ws);
    }();
    return tab;
}

template <class F>
c128 gl_panels_q(F&& f, f128 a, f128 b, int panels) {
    const auto& [xs, ws] = gl16_q();
    c128 total;
    const f128 w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const f128 mid = a + (p + 0.5q) * w;
        for (int i = 0; i < 16; ++i)
            total += scale(f(mid + w / 2 * xs[i]), ws[i] * w / 2);
    }
    return total;
}

} // namespace qd
} // namespace scl

#endif
