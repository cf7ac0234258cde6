#ifndef SCL_ZETA_HPP
#define SCL_ZETA_HPP

#include <array>
#include <cmath>

#include "scl/cplx.hpp"
#include "scl/error.hpp"

namespace scl {

namespace detail {

// B_2, B_4, ..., B_28
inline constexpr std::array<double, 14> bernoulli_even = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0,
};

} // namespace detail

// Euler-Maclaurin evaluation of zeta(s); intended for sigma >= -1, |t| <= 200.
inline cplx zeta(const cplx& s) {
    require_finite(s, "zeta");
    if (std::abs(s - cplx(1.0)) < 1e-12) throw Error("zeta: pole at s = 1");
    const double t = std::abs(s.imag());
    const int n = 16 + int(std::ceil(0.7 * t));
    cplx sum(0.0);
    for (int k = 1; k < n; ++k) sum += powc(double(k), -s);
    const cplx ns = powc(double(n), -s);
    sum += ns * double(n) / (s - 1.0);
    sum += 0.5 * ns;
    // correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * n^{-s-2k+1}
    cplx poch = s;                 // rising factorial (s)_{2k-1}
    double fact = 2.0;             // (2k)!
    cplx npow = ns / double(n);    // n^{-s-1}
    for (size_t k = 1; k <= detail::bernoulli_even.size(); ++k) {
        if (k > 1) {
            poch *= (s + cplx(2.0 * k - 3.0)) * (s + cplx(2.0 * k - 2.0));
            fact *= (2.0 * k) * (2.0 * k - 1.0);
            npow /= double(n) * double(n);
        }
        const cplx term = detail::bernoulli_even[k - 1] / fact * poch * npow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace scl

#endif
