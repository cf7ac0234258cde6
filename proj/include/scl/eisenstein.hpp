#ifndef SCL_EISENSTEIN_HPP
#define SCL_EISENSTEIN_HPP

#include <cmath>
#include <cstdint>

#include "scl/arith.hpp"
#include "scl/bessel.hpp"
#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/gamma.hpp"
#include "scl/maass_form.hpp"
#include "scl/zeta.hpp"

namespace scl {

// nonconstant Fourier coefficient of E(z,s):
//   c(ell, s) = 2 pi^s sigma_{1-2s}(|ell|) |ell|^{s-1/2} / (Gamma(s) zeta(2s))
inline cplx eisenstein_c(std::int64_t ell, const cplx& s) {
    if (ell == 0) throw Error("eisenstein_c: ell must be nonzero");
    const double al = double(std::llabs(ell));
    return 2.0 * divisor_sigma(1.0 - 2.0 * s, std::llabs(ell)) *
           std::exp(s * std::log(pi) + (s - 0.5) * std::log(al) - log_gamma(s)) /
           zeta(2.0 * s);
}

// scattering term phi(s) = sqrt(pi) Gamma(s-1/2) zeta(2s-1) / (Gamma(s) zeta(2s))
inline cplx eisenstein_phi(const cplx& s) {
    return std::sqrt(pi) * std::exp(log_gamma(s - 0.5) - log_gamma(s)) *
           zeta(2.0 * s - 1.0) / zeta(2.0 * s);
}

// E(z, s) for real s > 1 or s = 1/2 + iu (u != 0); other s are excluded.
inline cplx eval_eisenstein(const cplx& z, const cplx& s, double tol = 1e-10) {
    const double x = z.real(), y = z.imag();
    if (!(y > 0.05)) throw Error("eval_eisenstein: Im(z) too small");
    const bool real_route = s.imag() == 0.0 && s.real() > 1.0;
    const bool line_route = s.real() == 0.5 && s.imag() != 0.0;
    if (!real_route && !line_route)
        throw Error("eval_eisenstein: s outside the supported set (real s > 1 or Re s = 1/2)");

    cplx val = powc(y, s) + eisenstein_phi(s) * powc(y, 1.0 - s);
    const double u = std::abs(s.imag());
    const int l_max = fourier_truncation(y, tol, real_route ? 2.0 * s.real() : u);
    const double sy = std::sqrt(y);
    if (real_route) {
        const double nu = s.real() - 0.5;
        for (int l = 1; l <= l_max; ++l) {
            const double kb = bessel_k_real_order(nu, 2.0 * pi * l * y);
            val += eisenstein_c(l, s) * sy * kb * 2.0 * std::cos(2.0 * pi * l * x);
        }
        return val;
    }
    // critical line: pair e^{pi u/2}-sized coefficients with scaled Bessel
    const cplx lg_s = log_gamma(s);
    const cplx zs = zeta(2.0 * s);
    for (int l = 1; l <= l_max; ++l) {
        const cplx c_scaled = 2.0 * divisor_sigma(1.0 - 2.0 * s, l) *
                              std::exp(s * std::log(pi) + (s - 0.5) * std::log(double(l)) -
                                       lg_s - pi * u / 2.0) /
                              zs;
        const double kt = bessel_k_imag_scaled(u, 2.0 * pi * l * y);
        val += c_scaled * sy * kt * 2.0 * std::cos(2.0 * pi * l * x);
    }
    return val;
}

} // namespace scl

#endif
