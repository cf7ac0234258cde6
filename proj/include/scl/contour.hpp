#ifndef SCL_CONTOUR_HPP
#define SCL_CONTOUR_HPP

#include <cmath>
#include <string>
#include <vector>

#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/gamma.hpp"
#include "scl/hyp2f1.hpp"

namespace scl {

struct ContourSpec {
    double beta = -0.75;  // abscissa of the vertical line
    double t_max = 60.0;  // truncation height
    double step = 0.25;   // initial trapezoid step
    double tol = 1e-6;

    void validate() const {
        if (!(t_max > 0.0)) throw Error("ContourSpec: t_max must be positive");
        if (!(step > 0.0 && step <= 0.25)) throw Error("ContourSpec: step must be in (0, 0.25]");
        if (!(tol > 0.0)) throw Error("ContourSpec: tol must be positive");
    }
};

struct LineIntegralResult {
    cplx value{};
    double err = 0.0;       // last Richardson halving change
    double tail_est = 0.0;  // truncation estimate from the last decade
    long evals = 0;
};

// (1/2 pi i) int_{beta - iT}^{beta + iT} f(w) dw by trapezoid with halving.
template <class F>
LineIntegralResult vertical_line_integral(F&& f, const ContourSpec& c) {
    c.validate();
    const double T = c.t_max;
    auto sample = [&](double t) -> cplx {
        const cplx v = f(cplx(c.beta, t));
        if (!is_finite(v))
            throw Error("vertical_line_integral: non-finite integrand at t = " +
                        std::to_string(t));
        return v;
    };
    double h = c.step;
    long n = std::lround(std::ceil(T / h));
    h = T / double(n);
    cplx sum = 0.5 * (sample(-T) + sample(T));
    for (long k = -n + 1; k < n; ++k) sum += sample(k * h);
    cplx integral = sum * h;
    long evals = 2 * n + 1;
    double err = std::abs(integral);
    for (int level = 0; level < 12; ++level) {
        // midpoints
        cplx mids(0.0);
        for (long k = -n; k < n; ++k) mids += sample((k + 0.5) * h);
        evals += 2 * n;
        h *= 0.5;
        n *= 2;
        const cplx next = (integral / (2.0 * h) + mids) * h;
        err = std::abs(next - integral);
        integral = next;
        if (err <= c.tol * std::max(std::abs(integral), 1e-300)) break;
        if (h < 1e-4) break;
    }
    // last-decade magnitude -> crude truncation estimate
    double mag = 0.0;
    const int probes = 8;
    for (int i = 0; i < probes; ++i)
        mag = std::max(mag, std::abs(sample(0.9 * T + 0.1 * T * i / (probes - 1.0))));
    const double tail = mag * 0.1 * T / pi;
    return {integral / (2.0 * pi), err / (2.0 * pi), tail, evals};
}

// Barnes representation of 2F1 along Re(w) = spec.beta; requires
// Re(alpha), Re(beta) > -spec.beta and |arg(-z)| < pi.
inline cplx barnes_2f1(const cplx& alpha, const cplx& beta, const cplx& gamma,
                       const cplx& z, const ContourSpec& c) {
    const double rho = -c.beta;
    if (!(rho > 0.0) || alpha.real() <= rho || beta.real() <= rho)
        throw Error("barnes_2f1: line placement violates Re(alpha), Re(beta) > rho");
    if (z.imag() == 0.0 && z.real() >= 0.0)
        throw Error("barnes_2f1: requires |arg(-z)| < pi");
    const cplx lmz = logmz(z);
    auto f = [&](const cplx& w) -> cplx {
        return std::exp(log_gamma(alpha + w) + log_gamma(beta + w) + log_gamma(-w) -
                        log_gamma(gamma + w) + w * lmz);
    };
    const cplx integral = vertical_line_integral(f, c).value;
    return gamma_ratio({gamma}, {alpha, beta}) * integral;
}

} // namespace scl

#endif
