#ifndef SCL_GAMMA_HPP
#define SCL_GAMMA_HPP

#include <array>
#include <cmath>

#include "scl/cplx.hpp"
#include "scl/error.hpp"

namespace scl {

namespace detail {

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
inline constexpr double lanczos_g = 607.0 / 128.0;

inline cplx log_gamma_positive(cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    cplx sum(lanczos_c[0]);
    for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (z + cplx(k));
    const cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace detail

// Principal-branch log Gamma in the sense exp(log_gamma(z)) == Gamma(z).
// Throws on the poles z = 0, -1, -2, ...
inline cplx log_gamma(const cplx& z) {
    require_finite(z, "log_gamma");
    if (near_nonpositive_integer(z))
        throw Error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return detail::log_gamma_positive(z);
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    const cplx s = std::sin(pi * z);
    return std::log(pi) - std::log(s) - detail::log_gamma_positive(cplx(1.0) - z);
}

inline cplx gamma_c(const cplx& z) { return std::exp(log_gamma(z)); }

// exp(sum lg(num) - sum lg(den)); keeps intermediate magnitudes tame
inline cplx gamma_ratio(std::initializer_list<cplx> num,
                        std::initializer_list<cplx> den) {
    cplx acc(0.0);
    for (const cplx& z : num) acc += log_gamma(z);
    for (const cplx& z : den) acc -= log_gamma(z);
    return std::exp(acc);
}

// Euler beta
inline cplx beta_c(const cplx& a, const cplx& b) {
    return gamma_ratio({a, b}, {a + b});
}

} // namespace scl

#endif
