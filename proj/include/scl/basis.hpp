#ifndef SCL_BASIS_HPP
#define SCL_BASIS_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "scl/domain.hpp"
#include "scl/error.hpp"
#include "scl/maass_form.hpp"
#include "scl/maass_io.hpp"
#include "scl/quadrature.hpp"

namespace scl {

// norm integral of the lambda-normalized expansion over the truncated domain
inline double maass_norm_integral(const MaassForm& form, const TruncatedDomain& dom,
                                  double tol = 1e-10) {
    auto f = [&](double x, double y) {
        const double v = form.eval_unnormalized(x, y, tol);
        return v * v;
    };
    return integrate_fundamental_domain(f, dom);
}

// Fixes |c1| (phase real-positive). With L(1, Ad) in the file,
// |c1|^2 = cosh(pi r)/(pi L(1,Ad)); otherwise <phi, phi> = 1 is enforced by
// fundamental-domain quadrature of the lambda-normalized expansion.
inline MaassForm normalize_c1(const MaassForm& form, const QuadratureSpec& quad) {
    MaassForm out = form;
    if (form.l1ad) {
        // c1_scaled^2 = (1 + e^{-2 pi r}) / (2 pi L(1,Ad))
        const double v = (1.0 + std::exp(-2.0 * pi * form.r)) / (2.0 * pi * *form.l1ad);
        out.set_c1_scaled(std::sqrt(v));
        return out;
    }
    TruncatedDomain dom;
    dom.Y = 10.0;
    dom.panels_x = std::max(12, quad.panels / 2);
    dom.panels_y = std::max(12, quad.panels / 2);
    const double integral = maass_norm_integral(form, dom, quad.tol);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw Error("normalize_c1: quadrature failed");
    out.set_c1_scaled(1.0 / std::sqrt(integral));
    return out;
}

// normalization via the quadrature route regardless of l1ad (cross-check)
inline double c1_scaled_by_quadrature(const MaassForm& form, const TruncatedDomain& dom,
                                      double tol = 1e-10) {
    return 1.0 / std::sqrt(maass_norm_integral(form, dom, tol));
}

struct SpectralBasis {
    std::vector<MaassForm> forms; // sorted by increasing r

    size_t count() const { return forms.size(); }
    const MaassForm& operator[](size_t k) const { return forms.at(k); }

    void sort_and_check() {
        std::sort(forms.begin(), forms.end(),
                  [](const MaassForm& a, const MaassForm& b) { return a.r < b.r; });
        for (size_t i = 1; i < forms.size(); ++i)
            if (forms[i].r - forms[i - 1].r < 1e-6)
                throw Error("SpectralBasis: duplicate eigenvalue r = " +
                            std::to_string(forms[i].r));
    }

    size_t count_below(double T) const {
        size_t n = 0;
        for (const auto& f : forms)
            if (f.r <= T) ++n;
        return n;
    }
};

// main terms of the Weyl law N(T) = T^2/12 - 2T log T/pi + T(2 + log(pi/2))/pi
inline double weyl_law_main(double T) {
    return T * T / 12.0 - 2.0 * T * std::log(T) / pi +
           T * (2.0 + std::log(pi / 2.0)) / pi;
}

inline double weyl_law_error_scale(double T) { return T / std::log(T); }

// loads every maass file in a directory, normalizes, sorts by r
inline SpectralBasis load_basis(const std::string& dir,
                                const QuadratureSpec& quad = {}) {
    namespace fs = std::filesystem;
    SpectralBasis basis;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".txt") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths)
        basis.forms.push_back(normalize_c1(parse_maass_file(p), quad));
    if (basis.forms.empty()) throw Error("load_basis: no maass files in " + dir);
    basis.sort_and_check();
    return basis;
}

// automorphy screen: residual |phi(-1/z) - phi(z)| at deterministic sample points
inline double automorphy_residual(const MaassForm& form, int npts = 20,
                                  double tol = 1e-9) {
    double worst = 0.0, sup = 1e-300;
    for (int k = 0; k < npts; ++k) {
        const double x = -0.45 + 0.9 * ((k * 7) % npts) / double(npts);
        const double y = 0.50 + 0.30 * ((k * 3) % npts) / double(npts);
        const cplx z(x, y);
        const cplx w = cplx(-1.0, 0.0) / z;
        const cplx v1 = form.eval(z, tol);
        const cplx v2 = form.eval(w, tol);
        worst = std::max(worst, std::abs(v1 - v2));
        sup = std::max(sup, std::abs(v1));
    }
    return worst / sup;
}

} // namespace scl

#endif
