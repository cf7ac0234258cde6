#ifndef SCL_SPECTRAL_HPP
#define SCL_SPECTRAL_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scl/basis.hpp"
#include "scl/cplx.hpp"
#include "scl/error.hpp"
#include "scl/pairing.hpp"

namespace scl {

struct SpectralSpec {
    size_t K_max = 64;              // basis truncation (clamped to the basis)
    bool include_continuous = true;
    double u_max = 30.0;
    double du = 0.25;

    void validate() const {
        if (include_continuous && !(u_max >= 10.0))
            throw Error("SpectralSpec: u_max must be >= 10 when the continuous part is on");
        if (!(du > 0.0 && du <= 0.5)) throw Error("SpectralSpec: du must be in (0, 0.5]");
    }
};

// content hash identifying a (Phi1, Phi2) pair for the pairing cache
inline std::string pair_content_hash(const MaassForm& a, const MaassForm& b) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.12f|%d|%.10e|%.10e|%.10e||%.12f|%d|%.10e|%.10e|%.10e",
                  a.r, int(a.parity), a.lambda(2), a.lambda(3), a.c1_scaled(),
                  b.r, int(b.parity), b.lambda(2), b.lambda(3), b.c1_scaled());
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (const char* p = buf; *p; ++p) h = (h ^ std::uint64_t(*p)) * 1099511628211ull;
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

// Cache of the expensive domain quadratures for one (Phi1, Phi2) pair: the
// triple products over the basis and the Eisenstein pairings on the u-grid.
// Both are independent of s and h.
class PairingCache {
public:
    std::string hash;
    double du = 0.25;
    std::map<int, PairingResult> triple; // basis index -> <phi_k, conj(Phi1) Phi2>
    std::map<int, PairingResult> eis;    // j -> <E_{j du}, conj(Phi1) Phi2>

    static PairingCache build(const SpectralBasis& basis, const MaassForm& Phi1,
                              const MaassForm& Phi2, const SpectralSpec& spec,
                              const TruncatedDomain& dom, double tol = 1e-9) {
        spec.validate();
        PairingCache c;
        c.hash = pair_content_hash(Phi1, Phi2);
        c.du = spec.du;
        const size_t kmax = std::min(spec.K_max, basis.count());
        const int jmax = int(std::lround(spec.u_max / spec.du));
        // parallel fill: all entries are independent
        std::vector<int> jobs;
        for (size_t k = 0; k < kmax; ++k) jobs.push_back(int(k));
        for (int j = -jmax; j <= jmax; ++j) jobs.push_back(1000000 + j);
        std::vector<PairingResult> results(jobs.size());
        std::atomic<size_t> cursor{0};
        auto work = [&] {
            for (;;) {
                const size_t i = cursor.fetch_add(1);
                if (i >= jobs.size()) return;
                if (jobs[i] < 1000000) {
                    results[i] = triple_product(basis[size_t(jobs[i])], Phi1, Phi2, dom, tol);
                } else if (spec.include_continuous) {
                    const double u = (jobs[i] - 1000000) * spec.du;
                    results[i] = eisenstein_pairing(u, Phi1, Phi2, dom, tol);
                }
            }
        };
        const unsigned workers =
            std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i] < 1000000) c.triple[jobs[i]] = results[i];
            else if (spec.include_continuous) c.eis[jobs[i] - 1000000] = results[i];
        }
        return c;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw Error("PairingCache: cannot write " + path);
        out << "pairing-cache v1\n";
        out << "pair " << hash << "\n";
        char buf[160];
        std::snprintf(buf, sizeof buf, "du %.17g\n", du);
        out << buf;
        for (const auto& [k, p] : triple) {
            std::snprintf(buf, sizeof buf, "triple %d %.17g %.17g %.17g\n", k,
                          p.value.real(), p.value.imag(), p.err);
            out << buf;
        }
        for (const auto& [j, p] : eis) {
            std::snprintf(buf, sizeof buf, "eis %d %.17g %.17g %.17g\n", j,
                          p.value.real(), p.value.imag(), p.err);
            out << buf;
        }
    }

    static PairingCache load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error("PairingCache: cannot open " + path);
        PairingCache c;
        std::string line;
        if (!std::getline(in, line) || line != "pairing-cache v1")
            throw Error("PairingCache: bad header in " + path);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string key;
            ss >> key;
            if (key == "pair") ss >> c.hash;
            else if (key == "du") ss >> c.du;
            else if (key == "triple" || key == "eis") {
                int idx;
                double re, im, err;
                if (!(ss >> idx >> re >> im >> err))
                    throw Error("PairingCache: malformed line in " + path);
                PairingResult p{cplx(re, im), err, key};
                (key == "triple" ? c.triple : c.eis)[idx] = p;
            } else {
                throw Error("PairingCache: unknown key " + key);
            }
        }
        return c;
    }
};

// spectral side: D(s) + C(s) from the cached pairings
inline PairingResult spectral_side(std::int64_t h, const cplx& s,
                                   const SpectralBasis& basis,
                                   const SpectralSpec& spec,
                                   const PairingCache& cache) {
    spec.validate();
    const size_t kmax = std::min(spec.K_max, basis.count());
    cplx disc(0.0);
    double err_disc = 0.0;
    for (size_t k = 0; k < kmax; ++k) {
        const auto it = cache.triple.find(int(k));
        if (it == cache.triple.end())
            throw Error("spectral_side: missing triple product for k = " +
                        std::to_string(k));
        const cplx pid = poincare_inner_discrete(long(h), s, basis[k]);
        disc += pid * it->second.value;
        err_disc += std::abs(pid) * it->second.err;
    }
    // basis-truncation envelope: gamma decay past the last eigenvalue
    if (kmax > 0) {
        const double rk = basis[kmax - 1].r;
        const double t = std::abs(s.imag());
        const double decay =
            std::exp(-pi / 2.0 * (std::abs(rk - t) + rk + t - std::max(rk, t)));
        err_disc += 4.0 * decay * std::exp(-pi * rk / 2.0) *
                    std::pow(1.0 + rk, std::abs(s.real()) + 1.0);
    }

    cplx cont(0.0);
    double err_cont = 0.0;
    if (spec.include_continuous) {
        const int jmax = int(std::lround(spec.u_max / spec.du));
        // composite Simpson on the uniform grid
        auto term = [&](int j) -> cplx {
            const auto it = cache.eis.find(j);
            if (it == cache.eis.end())
                throw Error("spectral_side: missing eisenstein pairing at j = " +
                            std::to_string(j));
            return poincare_inner_eisenstein(long(h), s, j * spec.du) *
                   it->second.value;
        };
        cplx simpson(0.0), coarse(0.0);
        for (int j = -jmax; j <= jmax; ++j) {
            const cplx tj = term(j);
            const double w =
                (j == -jmax || j == jmax) ? 1.0 : ((jmax - j) % 2 == 1 ? 4.0 : 2.0);
            simpson += w * tj;
            if ((j + jmax) % 2 == 0) {
                const double wc =
                    (j == -jmax || j == jmax) ? 1.0 : ((jmax - j) / 2 % 2 == 1 ? 4.0 : 2.0);
                coarse += wc * tj;
            }
            const auto& pr = cache.eis.at(j);
            err_cont += std::abs(poincare_inner_eisenstein(long(h), s, j * spec.du)) *
                        pr.err * spec.du / (4.0 * pi);
        }
        simpson *= spec.du / 3.0;
        coarse *= 2.0 * spec.du / 3.0;
        cont = simpson / (4.0 * pi);
        err_cont += std::abs(simpson - coarse) / (4.0 * pi);
        // u-truncation: integrand magnitude at the edge, extrapolated
        const double edge = std::abs(term(jmax)) / (4.0 * pi);
        err_cont += edge * 2.0 / pi;
    }

    PairingResult out;
    out.value = disc + cont;
    out.err = err_disc + err_cont;
    out.params = "spectral K=" + std::to_string(kmax) +
                 " umax=" + std::to_string(spec.u_max) + " du=" + std::to_string(spec.du);
    out.validate();
    return out;
}

// Bernstein-Reznikov diagnostic b_k = <phi_k, |Phi|^2>^2 e^{pi r_k}
inline double br_weight(const MaassForm& phi_k, const MaassForm& Phi,
                        const TruncatedDomain& dom) {
    const PairingResult t = triple_product(phi_k, Phi, Phi, dom);
    const double v = std::abs(t.value);
    return v * v * std::exp(pi * phi_k.r);
}

} // namespace scl

#endif
