#include <doctest.h>

#include <cmath>
#include <limits>

#include "scint/errors.hpp"
#include "scint/phys_params.hpp"

using namespace scint;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

PhysicalParams base() {
    PhysicalParams p;
    p.cn2 = 1e-14;
    p.l0 = 6.3e-3;
    p.L0 = kInf;
    p.q0 = 1e7;
    p.z = 1000.0;
    p.r0 = 0.01;
    p.lambda_c = kInf;
    return p;
}
} // namespace

TEST_CASE("diffuser off: r1 equals r0") {
    auto p = base();
    const auto d = derive_params(p);
    CHECK(d.r1 == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("lambda_c^2 = 2 r0^2 halves r1^2") {
    auto p = base();
    p.lambda_c = p.r0 * std::sqrt(2.0);
    const auto d = derive_params(p);
    CHECK(d.r1 == doctest::Approx(p.r0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("rytov variance reference point") {
    auto p = base();
    const auto d = derive_params(p);
    // 1.23 * 1e-14 * (1e7)^(7/6) * 1000^(11/6), evaluated independently
    const double expected = 1.23 * 1e-14 * std::exp(7.0 / 6.0 * std::log(1e7)) *
                            std::exp(11.0 / 6.0 * std::log(1000.0));
    CHECK(d.sigma1_sq == doctest::Approx(expected).epsilon(1e-14));
    CHECK(d.sigma1_sq == doctest::Approx(0.571).epsilon(2e-3));
}

TEST_CASE("fresnel-scaled radius") {
    auto p = base();
    const auto d = derive_params(p);
    CHECK(d.rho0_sq == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.rho1_sq <= d.rho0_sq);
}

TEST_CASE("validation names the offending parameter") {
    auto p = base();
    p.cn2 = -1.0;
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("cn2"), ValidationError);
    p = base();
    p.r0 = 0.0;
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("r0"), ValidationError);
    p = base();
    p.q0 = kInf;
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("q0"), ValidationError);
    p = base();
    p.L0 = 1e-3; // smaller than l0
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("l0"), ValidationError);
}

TEST_CASE("regime thresholds") {
    auto p = base();
    auto at_sigma = [&](double target) {
        auto q = p;
        q.cn2 = target / (1.23 * std::pow(p.q0, 7.0 / 6.0) * std::pow(p.z, 11.0 / 6.0));
        const auto d = derive_params(q);
        return validate_regime(d, q);
    };
    auto r1 = at_sigma(0.1);
    CHECK(r1.within_rytov);
    CHECK(r1.within_moderate);
    auto r2 = at_sigma(0.5);
    CHECK_FALSE(r2.within_rytov);
    CHECK(r2.within_moderate);
    auto r3 = at_sigma(1.2);
    CHECK_FALSE(r3.within_moderate);
    CHECK_FALSE(r3.messages.empty());
    // within_rytov implies within_moderate by construction of the thresholds
    CHECK((!r1.within_rytov || r1.within_moderate));
}

TEST_CASE("scale consistency and monotonicity properties") {
    auto p = base();
    const auto d = derive_params(p);
    for (double s : {2.0, 7.5, 0.125}) {
        auto q = p;
        q.cn2 = p.cn2 * s;
        const auto ds = derive_params(q);
        CHECK(ds.sigma1_sq == doctest::Approx(s * d.sigma1_sq).epsilon(1e-12));
    }
    double prev = 0.0;
    for (double z = 100.0; z <= 3000.0; z += 100.0) {
        auto q = p;
        q.z = z;
        const auto dz = derive_params(q);
        CHECK(dz.sigma1_sq > prev);
        prev = dz.sigma1_sq;
    }
    // r1 -> r0 monotonically as lambda_c grows
    double prev_r1 = 0.0;
    for (double lc : {0.001, 0.01, 0.1, 1.0, 10.0}) {
        auto q = p;
        q.lambda_c = lc;
        const auto dl = derive_params(q);
        CHECK(dl.r1 > prev_r1);
        CHECK(dl.r1 <= p.r0);
        prev_r1 = dl.r1;
    }
}
