#ifndef SCL_CPLX_HPP
#define SCL_CPLX_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "scl/error.hpp"

namespace scl {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846264338327950288;

inline bool is_finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const cplx& z, const char* where) {
    if (!is_finite(z)) throw Error(std::string("non-finite value in ") + where);
}

// log(1-z) with the z+i0 convention on the cut z in (1, inf).
inline cplx log1mz(const cplx& z) {
    if (z.imag() == 0.0 && z.real() > 1.0)
        return {std::log(z.real() - 1.0), -pi};
    return std::log(cplx(1.0) - z);
}

// log(-z) with the z+i0 convention on the cut z in (0, inf).
inline cplx logmz(const cplx& z) {
    if (z.imag() == 0.0) {
        if (z.real() > 0.0) return {std::log(z.real()), -pi};
        if (z.real() < 0.0) return {std::log(-z.real()), 0.0};
    }
    return std::log(-z);
}

// principal z^w (exp(w log z)); 0^w = 0 for Re w > 0
inline cplx powc(const cplx& z, const cplx& w) {
    if (z == cplx(0.0)) return cplx(0.0);
    return std::exp(w * std::log(z));
}

inline cplx powc(double x, const cplx& w) {
    if (x == 0.0) return cplx(0.0);
    if (x > 0.0) return std::exp(w * std::log(x));
    return std::exp(w * cplx(std::log(-x), -pi)); // x+i0 convention
}

inline bool near_nonpositive_integer(const cplx& z, double tol = 1e-12) {
    if (z.real() > 0.5 || std::abs(z.imag()) > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

} // namespace scl

#endif
