#ifndef SCL_MAASS_FORM_HPP
#define SCL_MAASS_FORM_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scl/arith.hpp"
#include "scl/bessel.hpp"
#include "scl/cplx.hpp"
#include "scl/error.hpp"

namespace scl {

enum class Parity { even, odd };

// K_{ir} only starts to decay past its turning point x ~ r, so truncation
// budgets carry the spectral parameter plus an Airy-transition margin.
inline int fourier_truncation(double y, double tol, double r) {
    const double off = r > 0.0 ? r + 2.5 * std::cbrt(r) : 0.0;
    return int(std::ceil((std::log(1.0 / tol) + 5.0 + off) / (2.0 * pi * y)));
}

// Hecke-normalized Maass cusp form for SL(2,Z), level 1.
//
// Fourier data: C(n) = c1 * lambda(|n|) with C(-n) = +C(n) (even) or -C(n)
// (odd). Internally the normalization is carried as c1_scaled =
// c1 * e^{-pi r/2}, which is O(1) and pairs with the scaled Bessel kernel.
class MaassForm {
public:
    double r = 0.0;
    Parity parity = Parity::even;
    std::optional<double> l1ad;       // L(1, Ad phi) when the file supplies it
    std::string source;
    std::map<std::int64_t, double> prime_lambda;

    MaassForm() { lam_ = {0.0, 1.0}; filled_ = 2; }

    MaassForm(const MaassForm& o)
        : r(o.r), parity(o.parity), l1ad(o.l1ad), source(o.source),
          prime_lambda(o.prime_lambda) {
        std::lock_guard<std::mutex> lock(o.mu_);
        lam_ = o.lam_;
        filled_.store(o.filled_.load());
        c1_scaled_ = o.c1_scaled_;
    }

    MaassForm& operator=(const MaassForm& o) {
        if (this == &o) return *this;
        MaassForm tmp(o);
        r = tmp.r;
        parity = tmp.parity;
        l1ad = tmp.l1ad;
        source = std::move(tmp.source);
        prime_lambda = std::move(tmp.prime_lambda);
        lam_ = std::move(tmp.lam_);
        filled_.store(tmp.filled_.load());
        c1_scaled_ = tmp.c1_scaled_;
        return *this;
    }

    bool normalized() const { return c1_scaled_ > 0.0; }
    double c1_scaled() const {
        if (!normalized()) throw Error("MaassForm: form is not normalized");
        return c1_scaled_;
    }
    void set_c1_scaled(double v) { c1_scaled_ = v; }
    // |c1| itself (exponentially large in r); callers usually want c1_scaled
    double c1_magnitude() const { return c1_scaled() * std::exp(pi * r / 2.0); }

    double eigenvalue() const { return 0.25 + r * r; }

    // Hecke eigenvalue lambda(n), multiplicative with the p-power recursion
    double lambda(std::int64_t n) const {
        if (n < 1) throw Error("hecke_coefficient: index must be positive");
        if (n < filled_.load(std::memory_order_acquire)) return lam_[size_t(n)];
        std::lock_guard<std::mutex> lock(mu_);
        extend_locked(n);
        return lam_[size_t(n)];
    }

    void ensure_lambda(std::int64_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        extend_locked(n);
    }

    // full Fourier coefficient C(n) relative to c1 = c1_scaled e^{pi r/2};
    // returns C(n) e^{-pi r/2}, the size that pairs with scaled Bessel
    cplx coeff_scaled(std::int64_t n) const {
        if (n == 0) throw Error("MaassForm: no zeroth coefficient");
        const double lam = lambda(std::llabs(n));
        const double mag = c1_scaled() * lam;
        if (parity == Parity::even) return cplx(mag, 0.0);
        return n > 0 ? cplx(mag, 0.0) : cplx(-mag, 0.0);
    }

    // pointwise value; truncation chosen so the Bessel tail is below tol
    cplx eval(const cplx& z, double tol = 1e-10) const {
        const double x = z.real(), y = z.imag();
        if (!(y > 0.05))
            throw Error("eval_maass_form: Im(z) too small for the truncation budget");
        if (!normalized()) throw Error("eval_maass_form: form is not normalized");
        const int m_max = fourier_truncation(y, tol, r);
        ensure_lambda(m_max);
        const double sy = std::sqrt(y);
        double acc_cos = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            const double kt = bessel_k_imag_scaled(r, 2.0 * pi * m * y);
            const double term = lam_[size_t(m)] * kt;
            if (parity == Parity::even)
                acc_cos += term * 2.0 * std::cos(2.0 * pi * m * x);
            else
                acc_cos += term * 2.0 * std::sin(2.0 * pi * m * x);
        }
        const double v = c1_scaled_ * sy * acc_cos;
        return parity == Parity::even ? cplx(v, 0.0) : cplx(0.0, v);
    }

    // value of the lambda-normalized expansion (no c1), used by the
    // normalization quadrature itself
    double eval_unnormalized(double x, double y, double tol = 1e-10) const {
        const int m_max = fourier_truncation(y, tol, r);
        ensure_lambda(m_max);
        double acc = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            const double kt = bessel_k_imag_scaled(r, 2.0 * pi * m * y);
            const double cs = parity == Parity::even ? std::cos(2.0 * pi * m * x)
                                                     : std::sin(2.0 * pi * m * x);
            acc += lam_[size_t(m)] * kt * 2.0 * cs;
        }
        return std::sqrt(y) * acc;
    }

    // data sanity screen: |lambda(n)| <= d(n) n^{7/64} (1 + slack)
    void screen_lambda_bound(std::int64_t n_max, double slack = 0.15) const {
        ensure_lambda(n_max);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const double bound =
                divisor_count(n) * std::pow(double(n), 7.0 / 64.0) * (1.0 + slack);
            if (std::abs(lam_[size_t(n)]) > bound)
                throw Error("MaassForm: coefficient bound violated at n = " +
                            std::to_string(n));
        }
    }

private:
    void extend_locked(std::int64_t n) const {
        const std::int64_t have = filled_.load(std::memory_order_relaxed);
        if (n < have) return;
        lam_.resize(size_t(n) + 1);
        for (std::int64_t m = have; m <= n; ++m) lam_[size_t(m)] = compute_lambda(m);
        filled_.store(n + 1, std::memory_order_release);
    }

    double compute_lambda(std::int64_t n) const {
        double out = 1.0;
        for (const auto& [p, k] : factorize(n)) {
            auto it = prime_lambda.find(p);
            if (it == prime_lambda.end())
                throw Error("hecke_coefficient: missing prime coefficient p = " +
                            std::to_string(p));
            const double lp = it->second;
            double prev = 1.0, cur = lp;
            for (int j = 1; j < k; ++j) {
                const double next = lp * cur - prev;
                prev = cur;
                cur = next;
            }
            out *= cur;
        }
        return out;
    }

    mutable std::vector<double> lam_;
    mutable std::atomic<std::int64_t> filled_{1};
    mutable std::mutex mu_;
    double c1_scaled_ = 0.0;
};

} // namespace scl

#endif
