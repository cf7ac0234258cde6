#ifndef SCL_GEOMETRIC_HPP
#define SCL_GEOMETRIC_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "scl/bessel.hpp"
#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/maass_form.hpp"
#include "scl/pairing.hpp"
#include "scl/quadrature.hpp"

namespace scl {

struct GeometricSpec {
    std::int64_t N_max = 1200;
    QuadratureSpec quad{QuadScheme::gauss_legendre_panels, 0, 1e-7, 0.0};

    void validate(std::int64_t h) const {
        if (N_max < 4 * h) throw Error("GeometricSpec: N_max must be >= 4h");
    }
};

namespace detail {

// scaled Mellin factor: int_0^inf y^s e^{-2 pi h y} Kt_{r1}(2 pi |n| y)
// Kt_{r2}(2 pi |n+h| y) dy/y on a log grid. The e^{pi r/2} scalings cancel
// against the e^{-pi r/2} carried by coeff_scaled, so the geometric terms
// assemble without any large/small exponential pairs.
inline cplx bessel_pair_mellin_scaled(std::int64_t n, std::int64_t h, const cplx& s,
                                      double r1, double r2, double tol) {
    const double an = double(std::llabs(n));
    const double am = double(std::llabs(n + h));
    const double sigma = s.real();
    const double rate = 2.0 * pi * (an + am + h); // decay once both K's turn over
    const double y_osc = (std::max(r1, r2) + 10.0) / (2.0 * pi * std::min(an, am));
    const double y_hi = y_osc + (60.0 + 3.0 * std::abs(s.imag()) +
                                 3.0 * sigma * std::log1p(y_osc + 2.0)) / rate;
    const double y_lo = std::pow(tol * 1e-3, 1.0 / sigma) / (an + am);
    const double width = std::log(y_hi / y_lo);
    const double cycles = (r1 + r2 + std::abs(s.imag())) * width / (2.0 * pi);
    const int panels = std::max(12, int(std::ceil(1.35 * cycles)) + 8);
    // integrate in t = log y
    auto f = [&](double t) -> cplx {
        const double y = std::exp(t);
        const double k1 = bessel_k_imag_scaled(r1, 2.0 * pi * an * y);
        const double k2 = bessel_k_imag_scaled(r2, 2.0 * pi * am * y);
        return std::exp(s * t - 2.0 * pi * h * y) * (k1 * k2);
    };
    return gauss_legendre_panels(f, std::log(y_lo), std::log(y_hi), panels).value;
}

} // namespace detail

// geometric side of the spectral identity:
//   sum_{n != 0, -h, |n| <= N_max} C1(n) C2(n+h) I_{r1,r2}(n, s)
// with the coefficient normalization carried in scaled form.
inline PairingResult geometric_side(std::int64_t h, const cplx& s,
                                    const MaassForm& Phi1, const MaassForm& Phi2,
                                    const GeometricSpec& spec) {
    if (!(s.real() > 1.0)) throw Error("geometric_side: requires Re(s) > 1");
    spec.validate(h);
    if (!Phi1.normalized() || !Phi2.normalized())
        throw Error("geometric_side: forms must be normalized");
    const double tol = spec.quad.tol;
    Phi1.ensure_lambda(spec.N_max + h + 1);
    Phi2.ensure_lambda(spec.N_max + h + 1);

    std::vector<std::int64_t> ns;
    ns.reserve(2 * size_t(spec.N_max));
    for (std::int64_t n = -spec.N_max; n <= spec.N_max; ++n)
        if (n != 0 && n != -h) ns.push_back(n);

    std::vector<cplx> terms(ns.size());
    const unsigned workers =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= ns.size()) return;
            const std::int64_t n = ns[i];
            const cplx c = Phi1.coeff_scaled(n) * std::conj(Phi2.coeff_scaled(n + h));
            terms[i] =
                c * detail::bessel_pair_mellin_scaled(n, h, s, Phi1.r, Phi2.r, tol);
        }
    };
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    cplx total(0.0);
    double magsum = 0.0;
    for (const cplx& t : terms) {
        total += t;
        magsum += std::abs(t);
    }
    // envelope tail from the design rule (N/h)^{-2 sigma + 1 + 2 theta + 0.1}
    const double theta = 7.0 / 64.0;
    const double head = magsum;
    const double tail_exp = -2.0 * s.real() + 1.0 + 2.0 * theta + 0.1;
    const double tail = head * std::pow(double(spec.N_max) / double(h), tail_exp);
    PairingResult out;
    out.value = total;
    out.err = tail + magsum * tol * 20.0;
    out.params = "geom N=" + std::to_string(spec.N_max) +
                 " h=" + std::to_string(h);
    out.validate();
    return out;
}

} // namespace scl

#endif
