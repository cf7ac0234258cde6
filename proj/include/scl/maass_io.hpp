#ifndef SCL_MAASS_IO_HPP
#define SCL_MAASS_IO_HPP

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "scl/error.hpp"
#include "scl/maass_form.hpp"

namespace scl {

namespace detail {

inline Error parse_error(int line, const std::string& msg) {
    return Error("maass file parse error at line " + std::to_string(line) + ": " + msg);
}

inline double parse_number(const std::string& tok, int line) {
    try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "non-numeric field '" + tok + "'");
    }
}

} // namespace detail

// Line-oriented `maass-form v1` reader. Unknown keys are rejected; all
// errors carry the offending line number.
inline MaassForm parse_maass_stream(std::istream& in) {
    MaassForm form;
    std::string line;
    int lineno = 0;
    bool have_r = false, have_parity = false, header = false;
    std::set<std::int64_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "maass-form v1")
                throw detail::parse_error(1, "expected header 'maass-form v1'");
            header = true;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "level") {
            std::string v;
            ss >> v;
            if (detail::parse_number(v, lineno) != 1.0)
                throw detail::parse_error(lineno, "only level 1 is supported");
        } else if (key == "parity") {
            std::string v;
            ss >> v;
            if (v == "even") form.parity = Parity::even;
            else if (v == "odd") form.parity = Parity::odd;
            else throw detail::parse_error(lineno, "invalid parity token '" + v + "'");
            have_parity = true;
        } else if (key == "r") {
            std::string v;
            ss >> v;
            form.r = detail::parse_number(v, lineno);
            if (!(form.r > 0.0)) throw detail::parse_error(lineno, "r must be positive");
            have_r = true;
        } else if (key == "l1ad") {
            std::string v;
            ss >> v;
            form.l1ad = detail::parse_number(v, lineno);
        } else if (key == "source") {
            std::string rest;
            std::getline(ss, rest);
            while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            form.source = rest;
        } else if (key == "coeff") {
            std::string ns, vs;
            ss >> ns >> vs;
            const double nv = detail::parse_number(ns, lineno);
            const auto n = std::int64_t(nv);
            if (double(n) != nv || n < 1)
                throw detail::parse_error(lineno, "coefficient index must be a positive integer");
            if (!seen.insert(n).second)
                throw detail::parse_error(lineno,
                                          "duplicate coefficient index " + std::to_string(n));
            const double v = detail::parse_number(vs, lineno);
            if (n == 1) {
                if (v != 1.0)
                    throw detail::parse_error(lineno, "lambda(1) must equal 1");
            } else {
                form.prime_lambda[n] = v;
            }
        } else {
            throw detail::parse_error(lineno, "unknown key '" + key + "'");
        }
        std::string extra;
        if (ss >> extra) throw detail::parse_error(lineno, "trailing token '" + extra + "'");
    }
    if (!header) throw detail::parse_error(1, "empty file");
    if (!have_r) throw Error("maass file parse error: missing required key 'r'");
    if (!have_parity) throw Error("maass file parse error: missing required key 'parity'");
    // only prime indices participate in the recursion; composites would
    // shadow derived values
    for (const auto& [n, v] : form.prime_lambda) {
        if (factorize(n).size() != 1 || factorize(n)[0].second != 1)
            throw Error("maass file parse error: coefficient index " + std::to_string(n) +
                        " is not prime (composites are derived)");
    }
    return form;
}

inline MaassForm parse_maass_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open maass file: " + path);
    try {
        MaassForm f = parse_maass_stream(in);
        f.source = f.source.empty() ? path : f.source;
        return f;
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

inline std::string serialize_maass_form(const MaassForm& form) {
    std::ostringstream out;
    out << "maass-form v1\n";
    out << "level 1\n";
    out << "parity " << (form.parity == Parity::even ? "even" : "odd") << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "r %.12f\n", form.r);
    out << buf;
    if (form.l1ad) {
        std::snprintf(buf, sizeof buf, "l1ad %.10e\n", *form.l1ad);
        out << buf;
    }
    if (!form.source.empty()) out << "source " << form.source << "\n";
    for (const auto& [p, v] : form.prime_lambda) {
        std::snprintf(buf, sizeof buf, "coeff %lld %.15e\n", (long long)p, v);
        out << buf;
    }
    return out.str();
}

} // namespace scl

#endif
