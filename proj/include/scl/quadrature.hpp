#ifndef SCL_QUADRATURE_HPP
#define SCL_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <vector>

#include "scl/cplx.hpp"
#include "scl/error.hpp"

namespace scl {

enum class QuadScheme { tanh_sinh, gauss_legendre_panels };

struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::tanh_sinh;
    int panels = 64;
    double tol = 1e-10;
    double cutoff = 0.0; // upper limit for semi-infinite integrals; <= 0 = auto

    void validate() const {
        if (!(tol > 0.0 && tol < 1.0)) throw Error("QuadratureSpec: tol must be in (0,1)");
        if (panels <= 0) throw Error("QuadratureSpec: panels must be positive");
    }
};

template <class T>
struct QuadResult {
    T value{};
    double err = 0.0;
    long evals = 0;
};

namespace detail {

struct TanhSinhNode {
    double u;      // distance of abscissa from the nearer endpoint, in [0,1] units
    double w;      // weight
    int side;      // -1 left endpoint, +1 right, 0 center
};

// nodes for one level: t = k*h over (0, t_cut], plus t = 0 at level 0
inline void tanh_sinh_nodes(double h, bool include_even, std::vector<TanhSinhNode>& out) {
    constexpr double t_cut = 6.11;
    const double lam = pi / 2.0;
    out.clear();
    for (int k = 1;; ++k) {
        if (include_even == false && k % 2 == 0) continue;
        const double t = k * h;
        if (t > t_cut) break;
        const double sh = lam * std::sinh(t);
        const double ch = std::cosh(t);
        // 1 - tanh(sh) = 2 e^{-2 sh} / (1 + e^{-2 sh}), stable for large sh
        const double e = std::exp(-2.0 * sh);
        const double u = 2.0 * e / (1.0 + e);
        const double w = lam * ch * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (w < 1e-320) break;
        out.push_back({u, w, +1});
        out.push_back({u, w, -1});
    }
}

} // namespace detail

// Tanh-sinh quadrature on [a,b]; handles integrable endpoint singularities.
// F is called with the abscissa; return type double or cplx.
template <class F>
auto tanh_sinh(F&& f, double a, double b, double tol, int max_level = 11)
    -> QuadResult<decltype(f(0.5 * (a + b)))> {
    using T = decltype(f(0.5 * (a + b)));
    const double c = 0.5 * (a + b), d = 0.5 * (b - a);
    std::vector<detail::TanhSinhNode> nodes;
    double h = 1.0;
    T sum = f(c) * (pi / 2.0); // t = 0 node, weight lam/cosh^2(0)
    long evals = 1;
    detail::tanh_sinh_nodes(h, true, nodes);
    for (const auto& n : nodes) {
        const double x = n.side > 0 ? b - d * n.u : a + d * n.u;
        sum += f(x) * n.w;
        ++evals;
    }
    T integral = sum * (d * h);
    double err = std::abs(integral);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        detail::tanh_sinh_nodes(h, false, nodes); // odd multiples only
        for (const auto& n : nodes) {
            const double x = n.side > 0 ? b - d * n.u : a + d * n.u;
            sum += f(x) * n.w;
            ++evals;
        }
        const T next = sum * (d * h);
        err = std::abs(next - integral);
        integral = next;
        if (level >= 3 && err <= tol * std::max(std::abs(integral), 1e-300)) break;
    }
    return {integral, err, evals};
}

namespace detail {

// Gauss-Legendre nodes on [-1,1] by Newton iteration, cached per order.
inline const std::array<std::array<double, 16>, 2>& gl16() {
    static const auto tab = [] {
        std::array<std::array<double, 16>, 2> t{};
        const int n = 16;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double p0 = 0, p1 = 0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0; p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                const double dp = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            p1 = 0.0; p0 = 1.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            const double dp = n * (x * p0 - p1) / (x * x - 1.0);
            t[0][i] = x;
            t[1][i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return t;
    }();
    return tab;
}

} // namespace detail

// Composite 16-point Gauss-Legendre over `panels` equal panels of [a,b].
template <class F>
auto gauss_legendre_panels(F&& f, double a, double b, int panels)
    -> QuadResult<decltype(f(0.5 * (a + b)))> {
    using T = decltype(f(0.5 * (a + b)));
    const auto& tab = detail::gl16();
    T total{};
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        const double mid = lo + 0.5 * w;
        T acc{};
        for (int i = 0; i < 16; ++i) acc += f(mid + 0.5 * w * tab[0][i]) * tab[1][i];
        total += acc * (0.5 * w);
    }
    return {total, 0.0, 16L * panels};
}

// same, with panel edges supplied (e.g. log-spaced)
template <class F>
auto gauss_legendre_edges(F&& f, const std::vector<double>& edges)
    -> QuadResult<decltype(f(edges.front()))> {
    using T = decltype(f(edges.front()));
    const auto& tab = detail::gl16();
    T total{};
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        const double lo = edges[p], hi = edges[p + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        T acc{};
        for (int i = 0; i < 16; ++i) acc += f(mid + half * tab[0][i]) * tab[1][i];
        total += acc * half;
    }
    return {total, 0.0, 16L * long(edges.size() - 1)};
}

inline std::vector<double> log_spaced_edges(double lo, double hi, int panels) {
    std::vector<double> e(panels + 1);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i <= panels; ++i) e[i] = std::exp(a + (b - a) * i / panels);
    return e;
}

inline std::vector<double> linear_edges(double lo, double hi, int panels) {
    std::vector<double> e(panels + 1);
    for (int i = 0; i <= panels; ++i) e[i] = lo + (hi - lo) * i / panels;
    return e;
}

} // namespace scl

#endif
