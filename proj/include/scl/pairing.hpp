#ifndef SCL_PAIRING_HPP
#define SCL_PAIRING_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "scl/basis.hpp"
#include "scl/cplx.hpp"
#include "scl/domain.hpp"
#include "scl/eisenstein.hpp"
#include "scl/error.hpp"
#include "scl/gamma.hpp"
#include "scl/maass_form.hpp"
#include "scl/zeta.hpp"

namespace scl {

struct PairingResult {
    cplx value{};
    double err = 0.0;
    std::string params;

    void validate() const {
        if (!(err >= 0.0) || !std::isfinite(err))
            throw Error("PairingResult: err must be finite and nonnegative");
    }
};

namespace detail {

// Fourier data of one automorphic factor frozen at a fixed height y:
// value(x) = sum_m term[m] cs(2 pi m x) (+ phase i for odd cusp forms)
struct FormRow {
    std::vector<double> term; // includes coefficient, sqrt(y), Bessel factor
    bool odd = false;
    cplx value(double x) const {
        double acc = 0.0;
        for (size_t m = 1; m < term.size(); ++m)
            acc += term[m] * (odd ? std::sin(2.0 * pi * m * x)
                                  : std::cos(2.0 * pi * m * x));
        return odd ? cplx(0.0, acc) : cplx(acc, 0.0);
    }
};

inline FormRow maass_row(const MaassForm& f, double y, double tol) {
    FormRow row;
    row.odd = f.parity == Parity::odd;
    const int m_max = fourier_truncation(y, tol, f.r);
    f.ensure_lambda(m_max);
    row.term.assign(size_t(m_max) + 1, 0.0);
    const double pref = 2.0 * f.c1_scaled() * std::sqrt(y);
    for (int m = 1; m <= m_max; ++m)
        row.term[size_t(m)] =
            pref * f.lambda(m) * bessel_k_imag_scaled(f.r, 2.0 * pi * m * y);
    return row;
}

// Eisenstein row on the critical line: value(x) = const + sum c~ K~ cos
struct EisRow {
    cplx constant{};
    std::vector<cplx> term;
    cplx value(double x) const {
        cplx acc = constant;
        for (size_t l = 1; l < term.size(); ++l)
            acc += term[l] * (2.0 * std::cos(2.0 * pi * l * x));
        return acc;
    }
};

inline EisRow eisenstein_row(double u, double y, double tol) {
    const cplx s(0.5, u);
    EisRow row;
    row.constant = powc(y, s) + eisenstein_phi(s) * powc(y, 1.0 - s);
    const double au = std::abs(u);
    const int l_max = fourier_truncation(y, tol, au);
    row.term.assign(size_t(l_max) + 1, cplx(0.0));
    const cplx lg_s = log_gamma(s);
    const cplx zs = zeta(2.0 * s);
    const double sy = std::sqrt(y);
    for (int l = 1; l <= l_max; ++l) {
        const cplx c_scaled = 2.0 * divisor_sigma(1.0 - 2.0 * s, l) *
                              std::exp(s * std::log(pi) +
                                       (s - 0.5) * std::log(double(l)) - lg_s -
                                       pi * au / 2.0) /
                              zs;
        row.term[size_t(l)] =
            c_scaled * sy * bessel_k_imag_scaled(au, 2.0 * pi * l * y);
    }
    return row;
}

// integral over the truncated fundamental domain, built row by row in y so
// Bessel evaluations are shared across the x sweep
template <class RowFactory>
cplx domain_integral_rows(RowFactory&& make_row, const TruncatedDomain& dom) {
    dom.validate();
    const auto& tab = gl16();
    const double y_floor = std::sqrt(3.0) / 2.0;
    const auto edges = log_spaced_edges(y_floor, dom.Y, dom.panels_y);
    cplx total(0.0);
    for (size_t pe = 0; pe + 1 < edges.size(); ++pe) {
        const double mid = 0.5 * (edges[pe] + edges[pe + 1]);
        const double half = 0.5 * (edges[pe + 1] - edges[pe]);
        for (int iy = 0; iy < 16; ++iy) {
            const double y = mid + half * tab[0][iy];
            const double wy = half * tab[1][iy] / (y * y);
            auto fx = make_row(y);
            // admissible x range: |x| <= 1/2 with |z| >= 1
            const double x_min = y < 1.0 ? std::sqrt(1.0 - y * y) : 0.0;
            cplx strip(0.0);
            if (x_min == 0.0) {
                const int px = dom.panels_x;
                const double w = 1.0 / px;
                for (int p = 0; p < px; ++p) {
                    const double lo = -0.5 + p * w;
                    for (int ix = 0; ix < 16; ++ix)
                        strip += fx(lo + 0.5 * w + 0.5 * w * tab[0][ix]) *
                                 (0.5 * w * tab[1][ix]);
                }
            } else {
                const double len = 0.5 - x_min;
                if (len <= 0.0) continue;
                const int px = std::max(2, int(std::ceil(dom.panels_x * 2.0 * len)));
                const double w = len / px;
                for (int side = 0; side < 2; ++side) {
                    const double base = side == 0 ? x_min : -0.5;
                    for (int p = 0; p < px; ++p) {
                        const double lo = base + p * w;
                        for (int ix = 0; ix < 16; ++ix)
                            strip += fx(lo + 0.5 * w + 0.5 * w * tab[0][ix]) *
                                     (0.5 * w * tab[1][ix]);
                    }
                }
            }
            total += strip * wy;
        }
    }
    return total;
}

inline std::string domain_tag(const TruncatedDomain& d) {
    return "Y=" + std::to_string(d.Y) + " px=" + std::to_string(d.panels_x) +
           " py=" + std::to_string(d.panels_y);
}

} // namespace detail

// <phi_k, conj(Phi1) Phi2> = int phi_k Phi1 conj(Phi2) dmu over the truncated
// domain; err combines panel sensitivity and the Y tail
inline PairingResult triple_product(const MaassForm& phi_k, const MaassForm& Phi1,
                                    const MaassForm& Phi2,
                                    const TruncatedDomain& dom, double tol = 1e-9) {
    if (!phi_k.normalized() || !Phi1.normalized() || !Phi2.normalized())
        throw Error("triple_product: all forms must be normalized");
    auto run = [&](const TruncatedDomain& d) {
        return detail::domain_integral_rows(
            [&](double y) {
                auto r1 = detail::maass_row(phi_k, y, tol);
                auto r2 = detail::maass_row(Phi1, y, tol);
                auto r3 = detail::maass_row(Phi2, y, tol);
                return [r1 = std::move(r1), r2 = std::move(r2),
                        r3 = std::move(r3)](double x) {
                    return r1.value(x) * r2.value(x) * std::conj(r3.value(x));
                };
            },
            d);
    };
    const cplx fine = run(dom);
    TruncatedDomain coarse = dom;
    coarse.panels_x = std::max(8, dom.panels_x - 3);
    coarse.panels_y = std::max(8, dom.panels_y - 3);
    const cplx rough = run(coarse);
    PairingResult out;
    out.value = fine;
    // Y tail: the product of three cusp forms decays like e^{-6 pi y}
    out.err = std::abs(fine - rough) + std::exp(-2.0 * pi * dom.Y);
    out.params = "triple " + detail::domain_tag(dom);
    out.validate();
    return out;
}

// <E(*,1/2+iu), conj(Phi1) Phi2> by direct quadrature
inline PairingResult eisenstein_pairing(double u, const MaassForm& Phi1,
                                        const MaassForm& Phi2,
                                        const TruncatedDomain& dom,
                                        double tol = 1e-9) {
    if (!Phi1.normalized() || !Phi2.normalized())
        throw Error("eisenstein_pairing: forms must be normalized");
    auto run = [&](const TruncatedDomain& d) {
        return detail::domain_integral_rows(
            [&](double y) {
                auto re = detail::eisenstein_row(u, y, tol);
                auto r2 = detail::maass_row(Phi1, y, tol);
                auto r3 = detail::maass_row(Phi2, y, tol);
                return [re = std::move(re), r2 = std::move(r2),
                        r3 = std::move(r3)](double x) {
                    return re.value(x) * r2.value(x) * std::conj(r3.value(x));
                };
            },
            d);
    };
    const cplx fine = run(dom);
    TruncatedDomain coarse = dom;
    coarse.panels_x = std::max(8, dom.panels_x - 3);
    coarse.panels_y = std::max(8, dom.panels_y - 3);
    const cplx rough = run(coarse);
    PairingResult out;
    out.value = fine;
    // constant term y^{1/2+iu} meets |Phi|^2 ~ e^{-4 pi y} in the tail
    out.err = std::abs(fine - rough) +
              std::sqrt(dom.Y) * std::exp(-2.0 * pi * dom.Y);
    out.params = "eis u=" + std::to_string(u) + " " + detail::domain_tag(dom);
    out.validate();
    return out;
}

// closed form <P_h(*,s), phi_k> = 2 pi sqrt(h) c_k(h) (4 pi h)^{-s}
//   Gamma(s-1/2+ir_k) Gamma(s-1/2-ir_k) / Gamma(s)
inline cplx poincare_inner_discrete(long h, const cplx& s, const MaassForm& form) {
    if (h < 1) throw Error("poincare_inner_discrete: h must be positive");
    const cplx za = s - 0.5 + cplx(0.0, form.r);
    const cplx zb = s - 0.5 - cplx(0.0, form.r);
    if (near_nonpositive_integer(za, 1e-9) || near_nonpositive_integer(zb, 1e-9))
        throw Error("poincare_inner_discrete: s sits on a pole of the numerator gammas");
    const double lam = form.lambda(h);
    const cplx logv = std::log(2.0 * pi * std::sqrt(double(h))) +
                      cplx(pi * form.r / 2.0) + log_gamma(za) + log_gamma(zb) -
                      log_gamma(s) - s * std::log(4.0 * pi * h);
    return form.c1_scaled() * lam * std::exp(logv);
}

// closed form <P_h(*,s), E(*,1/2+iu)>; u = 0 is the vanishing limit
inline cplx poincare_inner_eisenstein(long h, const cplx& s, double u) {
    if (h < 1) throw Error("poincare_inner_eisenstein: h must be positive");
    if (u == 0.0) return cplx(0.0); // 1/zeta(1) kills the coefficient
    const cplx sp(0.5, u);
    const cplx za = s - 0.5 + cplx(0.0, u);
    const cplx zb = s - 0.5 - cplx(0.0, u);
    if (near_nonpositive_integer(za, 1e-9) || near_nonpositive_integer(zb, 1e-9))
        throw Error("poincare_inner_eisenstein: s sits on a gamma pole");
    const cplx ch = std::conj(eisenstein_c(h, sp));
    return 2.0 * pi * std::sqrt(double(h)) * scl::powc(4.0 * pi * h, -s) * ch *
           std::exp(log_gamma(za) + log_gamma(zb) - log_gamma(s));
}

// Rankin-Selberg L(s, phi x conj(phi)) = sum_{n != 0} |c(n)|^2 |n|^{-s},
// assembled as 2 |c1|^2 zeta(s) L(s, sym^2 phi) / zeta(2s) with the symmetric
// square Euler product over the shipped primes. Returns value and a tail
// estimate for the missing primes.
inline std::pair<cplx, double> rankin_selberg_L(const cplx& s, const MaassForm& form) {
    if (!(s.real() > 1.0))
        throw Error("rankin_selberg_L: absolutely convergent range only");
    cplx log_sym2(0.0);
    std::int64_t p_max = 0;
    for (const auto& [p, lam] : form.prime_lambda) {
        const cplx x = powc(double(p), -s);
        const cplx factor = (1.0 - x) * (1.0 - (lam * lam - 2.0) * x + x * x);
        log_sym2 -= std::log(factor);
        p_max = std::max(p_max, p);
    }
    const cplx value = 2.0 * form.c1_scaled() * form.c1_scaled() *
                       std::exp(pi * form.r) * zeta(s) * std::exp(log_sym2) /
                       zeta(2.0 * s);
    const double tail =
        3.0 * std::pow(double(p_max), 0.5 - s.real()) * std::abs(value);
    return {value, tail};
}

// Rankin-Selberg unfolding of <E(*,s0), |phi|^2> at real s0 > 1:
//   pi^{1/2-s0} 2^{-2-s0} Gamma(s0/2) Gamma(s0/2+ir) Gamma(s0/2-ir)
//     / Gamma((s0+1)/2) * L(s0, phi x conj(phi))
inline cplx eisenstein_pairing_closed(double s0, const MaassForm& form) {
    if (!(s0 > 1.0)) throw Error("eisenstein_pairing_closed: needs real s0 > 1");
    const cplx s(s0, 0.0);
    const cplx gammas =
        std::exp(log_gamma(0.5 * s) + log_gamma(0.5 * s + cplx(0.0, form.r)) +
                 log_gamma(0.5 * s - cplx(0.0, form.r)) - log_gamma(0.5 * (s + 1.0)));
    return std::pow(pi, 0.5 - s0) * std::pow(2.0, -2.0 - s0) * gammas *
           rankin_selberg_L(s, form).first;
}

} // namespace scl

#endif
