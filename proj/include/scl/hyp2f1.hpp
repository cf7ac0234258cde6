#ifndef SCL_HYP2F1_HPP
#define SCL_HYP2F1_HPP

#include <cmath>
#include <cstdlib>

#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/gamma.hpp"

namespace scl {

namespace detail {

inline bool is_nonpositive_int(const cplx& z, double tol = 1e-12) {
    return near_nonpositive_integer(z, tol);
}

inline bool near_integer(const cplx& z, double tol = 1e-8) {
    return std::abs(z.imag()) < tol &&
           std::abs(z.real() - std::round(z.real())) < tol;
}

inline cplx hyp2f1_series(const cplx& a, const cplx& b, const cplx& c,
                          const cplx& z, int max_terms = 6000) {
    cplx term(1.0), sum(1.0);
    int quiet = 0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + cplx(k)) * (b + cplx(k)) / ((c + cplx(k)) * cplx(k + 1.0)) * z;
        sum += term;
        if (term == cplx(0.0)) return sum; // terminating case
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
        require_finite(sum, "gauss_2f1 series");
    }
    throw Error("gauss_2f1: series did not converge");
}

} // namespace detail

// Gauss hypergeometric function with transformation dispatch.
// Cut convention: real z >= 1 is evaluated as the limit from above (z + i0).
inline cplx gauss_2f1(const cplx& a, const cplx& b, const cplx& c, const cplx& z) {
    using namespace detail;
    if (is_nonpositive_int(c) &&
        !((is_nonpositive_int(a) && a.real() > c.real() - 0.5) ||
          (is_nonpositive_int(b) && b.real() > c.real() - 0.5)))
        throw Error("gauss_2f1: parameter pole (c nonpositive integer)");
    if (z == cplx(0.0)) return cplx(1.0);
    // terminating polynomial: valid for every z
    if (is_nonpositive_int(a) || is_nonpositive_int(b))
        return hyp2f1_series(a, b, c, z);
    const double az = std::abs(z);
    if (az <= 0.7) return hyp2f1_series(a, b, c, z);

    const cplx w1 = z / (z - cplx(1.0));
    if (std::abs(w1) <= 0.7) {
        // Pfaff
        return std::exp(-a * log1mz(z)) * hyp2f1_series(a, c - b, c, w1);
    }
    const cplx w2 = cplx(1.0) / (cplx(1.0) - z);
    if (std::abs(w2) <= 0.72 && !near_integer(b - a)) {
        // connection at 1/(1-z)
        const cplx lp = log1mz(z);
        const cplx t1 = gamma_ratio({c, b - a}, {b, c - a}) * std::exp(-a * lp) *
                        hyp2f1_series(a, c - b, a - b + 1.0, w2);
        const cplx t2 = gamma_ratio({c, a - b}, {a, c - b}) * std::exp(-b * lp) *
                        hyp2f1_series(b, c - a, b - a + 1.0, w2);
        return t1 + t2;
    }
    const cplx omz = cplx(1.0) - z;
    if (std::abs(omz) <= 0.6 && !near_integer(c - a - b)) {
        // connection at 1-z
        const cplx t1 = gamma_ratio({c, c - a - b}, {c - a, c - b}) *
                        hyp2f1_series(a, b, a + b - c + 1.0, omz);
        const cplx t2 = gamma_ratio({c, a + b - c}, {a, b}) *
                        std::exp((c - a - b) * log1mz(z)) *
                        hyp2f1_series(c - a, c - b, c - a - b + 1.0, omz);
        return t1 + t2;
    }
    if (az < 1.0 - 1e-3) return hyp2f1_series(a, b, c, z, 40000);
    if (std::abs(w1) < 1.0 - 1e-3)
        return std::exp(-a * log1mz(z)) * hyp2f1_series(a, c - b, c, w1, 40000);
    throw Error("gauss_2f1: no convergent transformation for this argument");
}

} // namespace scl

#endif
