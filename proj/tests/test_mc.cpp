#include <doctest.h>

#include <cmath>

#include "scint/quadrature.hpp"

using namespace scint;
using namespace scint::quad;

TEST_CASE("constant integrand has zero variance") {
    Domain d;
    d.axes = {Axis::finite(0, 1), Axis::finite(0, 1), Axis::finite(0, 1)};
    McOptions opts;
    opts.sample_count = 10'000;
    opts.seed = 7;
    auto r = mc_integrate([](const double*) { return 1.0; }, d, opts);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.abs_error == 0.0);
    CHECK(r.method == Method::monte_carlo);
}

TEST_CASE("6d product of gaussians hits the analytic product") {
    // int_R^6 exp(-sum x_i^2) = pi^3, sampled through deliberately mismatched
    // gaussian proposals so the weights are nontrivial.
    Domain d;
    for (int i = 0; i < 6; ++i) d.axes.push_back(Axis::gaussian_line(0.8));
    McOptions opts;
    opts.sample_count = 400'000;
    opts.seed = 2024;
    auto f = [](const double* x) {
        double s = 0.0;
        for (int i = 0; i < 6; ++i) s += x[i] * x[i];
        return std::exp(-s);
    };
    auto r = mc_integrate(f, d, opts);
    const double exact = std::pow(M_PI, 3);
    CHECK(std::fabs(r.value - exact) < 3.0 * r.abs_error);
    CHECK(r.abs_error / exact < 0.05);
}

TEST_CASE("same seed is bit-identical; thread count does not matter") {
    Domain d;
    d.axes = {Axis::finite(0, 1), Axis::finite(0, 1), Axis::semi_infinite_algebraic(0, 2.0)};
    auto f = [](const double* x) { return std::exp(-x[2]) * (x[0] + x[1] * x[1]); };
    McOptions a;
    a.sample_count = 200'000;
    a.seed = 555;
    a.strata = {4, 4, 2};
    a.threads = 1;
    McOptions b = a;
    b.threads = 7;
    auto ra = mc_integrate(f, d, a);
    auto rb = mc_integrate(f, d, b);
    CHECK(ra.value == rb.value);           // bit-identical
    CHECK(ra.abs_error == rb.abs_error);
    auto rc = mc_integrate(f, d, a);
    CHECK(ra.value == rc.value);
}

TEST_CASE("stratification reduces error on a smooth integrand") {
    Domain d;
    d.axes = {Axis::finite(0, 1), Axis::finite(0, 1)};
    auto f = [](const double* x) { return std::sin(6.0 * x[0]) + x[1]; };
    McOptions plain;
    plain.sample_count = 64'000;
    plain.seed = 1;
    McOptions strat = plain;
    strat.strata = {16, 16};
    auto rp = mc_integrate(f, d, plain);
    auto rs = mc_integrate(f, d, strat);
    CHECK(rs.abs_error < rp.abs_error);
}

TEST_CASE("mc error calibration: 2-sigma coverage over 100 seeds >= 90%") {
    Domain d;
    d.axes = {Axis::finite(0, 1), Axis::finite(0, 1), Axis::finite(0, 1)};
    auto f = [](const double* x) {
        return (x[0] + std::sin(3.0 * x[0])) * (1.0 + 0.5 * x[1]) * std::exp(-x[2]);
    };
    // exact: int_0^1 (x+sin3x) dx * int_0^1 (1+y/2) dy * int_0^1 e^-z dz
    const double ex = (0.5 + (1.0 - std::cos(3.0)) / 3.0) * 1.25 * (1.0 - std::exp(-1.0));
    int covered = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        McOptions opts;
        opts.sample_count = 4'000;
        opts.seed = 1000 + s;
        auto r = mc_integrate(f, d, opts);
        if (std::fabs(r.value - ex) <= 2.0 * r.abs_error) ++covered;
    }
    CHECK(covered >= 90);
}

TEST_CASE("rayleigh and tabulated proposals integrate known radial masses") {
    // int_0^inf k exp(-k^2/2) dk = 1 via rayleigh proposal (weight 1/pdf)
    Domain d;
    d.axes = {Axis::rayleigh_radial(1.3)};
    McOptions opts;
    opts.sample_count = 200'000;
    opts.seed = 40;
    auto r = mc_integrate([](const double* x) { return x[0] * std::exp(-0.5 * x[0] * x[0]); },
                          d, opts);
    CHECK(std::fabs(r.value - 1.0) < 3.0 * r.abs_error);

    // tabulated histogram proposal on a power law window
    std::vector<double> edges, dens;
    const int nb = 128;
    for (int i = 0; i <= nb; ++i) edges.push_back(std::exp(std::log(0.1) + (std::log(50.0) - std::log(0.1)) * i / nb));
    for (int i = 0; i < nb; ++i) dens.push_back(std::pow(0.5 * (edges[i] + edges[i + 1]), -1.5));
    Domain d2;
    d2.axes = {Axis::tabulated_radial(edges, dens)};
    auto r2 = mc_integrate([](const double* x) { return std::exp(-x[0]); }, d2, opts);
    // exact: int_0.1^50 e^-k dk
    const double exact = std::exp(-0.1) - std::exp(-50.0);
    CHECK(std::fabs(r2.value - exact) < 3.0 * r2.abs_error);
}

TEST_CASE("nan sample carries coordinates") {
    Domain d;
    d.axes = {Axis::finite(0, 1)};
    McOptions opts;
    opts.sample_count = 1'000;
    opts.seed = 3;
    CHECK_THROWS_AS(
        mc_integrate([](const double* x) { return x[0] > 0.2 ? std::nan("") : 1.0; }, d, opts),
        NanSampleError);
}

TEST_CASE("nested quadrature and mc agree on a shared integrand") {
    Domain d;
    d.axes = {Axis::finite(0, 2), Axis::semi_infinite_exponential(0, 1.0)};
    auto f = [](const double* x) { return std::cos(x[0]) * std::exp(-2.0 * x[1]) + 0.3; };
    auto rq = integrate_nd(f, d, 1e-9);
    McOptions opts;
    opts.sample_count = 400'000;
    opts.seed = 11;
    auto rm = mc_integrate(f, d, opts);
    CHECK(std::fabs(rq.value - rm.value) < 3.0 * (rm.abs_error + rq.abs_error));
}
