#ifndef SCL_ARITH_HPP
#define SCL_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "scl/cplx.hpp"
#include "scl/error.hpp"

namespace scl {

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw Error("factorize: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            out.emplace_back(p, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, k] : factorize(n)) {
        const size_t m = out.size();
        std::int64_t q = 1;
        for (int j = 1; j <= k; ++j) {
            q *= p;
            for (size_t i = 0; i < m; ++i) out.push_back(out[i] * q);
        }
    }
    return out;
}

inline int divisor_count(std::int64_t n) {
    int d = 1;
    for (const auto& [p, k] : factorize(n)) d *= (k + 1);
    return d;
}

// sigma_nu(ell) = sum over d | ell of d^nu, exact finite sum
inline cplx divisor_sigma(const cplx& nu, std::int64_t ell) {
    if (ell < 1) throw Error("divisor_sigma: index must be >= 1");
    cplx s(0.0);
    for (std::int64_t d : divisors(ell)) s += powc(double(d), nu);
    return s;
}

} // namespace scl

#endif
