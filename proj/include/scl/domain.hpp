#ifndef SCL_DOMAIN_HPP
#define SCL_DOMAIN_HPP

#include <cmath>
#include <vector>

#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/quadrature.hpp"

namespace scl {

// Truncated standard fundamental domain of SL(2,Z): |x| <= 1/2, |z| >= 1,
// y <= Y. Integrals carry the hyperbolic measure dx dy / y^2.
struct TruncatedDomain {
    double Y = 10.0;
    int panels_x = 12;
    int panels_y = 12;

    void validate() const {
        if (!(Y >= 5.0)) throw Error("TruncatedDomain: Y must be >= 5");
        if (panels_x < 8 || panels_y < 8)
            throw Error("TruncatedDomain: panel counts must be >= 8");
    }
};

// integral over the truncated domain of f(x,y) dx dy / y^2; y panels are
// log-spaced since every automorphic integrand here decays exponentially
template <class F>
auto integrate_fundamental_domain(F&& f, const TruncatedDomain& dom)
    -> decltype(f(0.0, 1.0)) {
    dom.validate();
    using T = decltype(f(0.0, 1.0));
    const auto& tab = detail::gl16();
    T total{};
    const double wx = 1.0 / dom.panels_x;
    for (int px = 0; px < dom.panels_x; ++px) {
        const double xa = -0.5 + px * wx;
        for (int ix = 0; ix < 16; ++ix) {
            const double x = xa + 0.5 * wx + 0.5 * wx * tab[0][ix];
            const double wxw = 0.5 * wx * tab[1][ix];
            const double ylo = std::sqrt(std::max(1.0 - x * x, 0.0));
            const auto edges = log_spaced_edges(ylo, dom.Y, dom.panels_y);
            T col{};
            for (size_t pe = 0; pe + 1 < edges.size(); ++pe) {
                const double mid = 0.5 * (edges[pe] + edges[pe + 1]);
                const double half = 0.5 * (edges[pe + 1] - edges[pe]);
                for (int iy = 0; iy < 16; ++iy) {
                    const double y = mid + half * tab[0][iy];
                    col += f(x, y) * (half * tab[1][iy] / (y * y));
                }
            }
            total += col * wxw;
        }
    }
    return total;
}

// pullback of z into the fundamental domain (translations + inversions)
inline cplx fundamental_domain_rep(cplx z) {
    for (int i = 0; i < 128; ++i) {
        double x = z.real() - std::round(z.real());
        z = cplx(x, z.imag());
        const double n2 = std::norm(z);
        if (n2 >= 1.0 - 1e-15) break;
        z = cplx(-z.real() / n2, z.imag() / n2);
    }
    return z;
}

} // namespace scl

#endif
