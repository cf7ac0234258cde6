#include <gtest/gtest.h>

#include <cmath>

#include "scl/contour.hpp"
#include "scl/gamma.hpp"
#include "scl/hyp2f1.hpp"

using scl::cplx;
using scl::pi;

namespace {
double rel_err(const cplx& got, const cplx& want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST(VerticalLine, CahenMellin) {
    scl::ContourSpec c;
    c.beta = 1.0;
    c.t_max = 40.0;
    c.step = 0.25;
    c.tol = 1e-10;
    for (double x : {1.0, 2.0}) {
        auto res = scl::vertical_line_integral(
            [&](const cplx& w) { return std::exp(scl::log_gamma(w)) * scl::powc(x, -w); },
            c);
        EXPECT_LT(rel_err(res.value, cplx(std::exp(-x))), 1e-8) << x;
        EXPECT_GE(res.err, 0.0);
    }
}

TEST(VerticalLine, PerronIndicator) {
    scl::ContourSpec c;
    c.beta = 1.0;
    c.t_max = 200.0;
    c.step = 0.25;
    c.tol = 1e-9;
    const double y = 2.0;
    auto res = scl::vertical_line_integral(
        [&](const cplx& w) { return scl::powc(y, w) / w; }, c);
    const double budget = y / (c.t_max * std::abs(std::log(y)));
    EXPECT_LT(std::abs(res.value - cplx(1.0)), budget);
}

TEST(VerticalLine, NonFiniteSampleAborts) {
    scl::ContourSpec c;
    c.beta = 0.0;
    c.t_max = 5.0;
    c.step = 0.25;
    c.tol = 1e-8;
    EXPECT_THROW(scl::vertical_line_integral(
                     [&](const cplx& w) { return cplx(1.0) / (w - cplx(0.0, 1.0)); }, c),
                 scl::Error);
}

TEST(Barnes, LogExample) {
    scl::ContourSpec c;
    c.beta = -0.65;
    c.t_max = 60.0;
    c.step = 0.2;
    c.tol = 1e-9;
    // F(1,1;2;-1/2) = -log(1.5)/(-1/2)
    const cplx got = scl::barnes_2f1(cplx(1.0), cplx(1.0), cplx(2.0), cplx(-0.5), c);
    EXPECT_LT(rel_err(got, cplx(2.0 * std::log(1.5))), 1e-7);
}

TEST(Barnes, SeriesOracle) {
    scl::ContourSpec c;
    c.beta = -0.55;
    c.t_max = 80.0;
    c.step = 0.2;
    c.tol = 1e-10;
    const cplx a(0.75, 2.0), b(0.75, -2.0), g(1.5, 0.0), z(-0.3, 0.0);
    const cplx got = scl::barnes_2f1(a, b, g, z, c);
    const cplx want = scl::gauss_2f1(a, b, g, z);
    EXPECT_LT(rel_err(got, want), 1e-8);
}

TEST(Barnes, LinePlacementError) {
    scl::ContourSpec c;
    c.beta = -0.9;
    c.t_max = 40.0;
    c.step = 0.2;
    c.tol = 1e-8;
    EXPECT_THROW(
        scl::barnes_2f1(cplx(0.5), cplx(1.0), cplx(2.0), cplx(-0.5), c),
        scl::Error);
    EXPECT_THROW(
        scl::barnes_2f1(cplx(2.0), cplx(1.5), cplx(2.0), cplx(0.5), c),
        scl::Error);
}

TEST(Barnes, AgreesWithSeriesOnSweep) {
    scl::ContourSpec c;
    c.beta = -0.45;
    c.t_max = 70.0;
    c.step = 0.2;
    c.tol = 1e-9;
    const double g = 0.6180339887498949;
    int tested = 0;
    for (int k = 0; k < 40 && tested < 20; ++k) {
        const cplx a(0.6 + 1.2 * std::fmod(0.2 + k * g, 1.0),
                     -1.0 + 2.0 * std::fmod(0.7 + k * g, 1.0));
        const cplx b(0.6 + 1.2 * std::fmod(0.45 + k * g, 1.0),
                     -1.0 + 2.0 * std::fmod(0.9 + k * g, 1.0));
        const cplx gg(1.2 + 1.5 * std::fmod(0.05 + k * g, 1.0), 0.0);
        const cplx z(-0.05 - 0.85 * std::fmod(0.33 + k * g, 1.0), 0.0);
        cplx got, want;
        try {
            got = scl::barnes_2f1(a, b, gg, z, c);
            want = scl::gauss_2f1(a, b, gg, z);
        } catch (const scl::Error&) {
            continue;
        }
        ++tested;
        EXPECT_LT(rel_err(got, want), 1e-6) << a << b << gg << z;
    }
    EXPECT_GE(tested, 20);
}
