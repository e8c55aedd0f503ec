#include "scint/first_order.hpp"

#include <algorithm>
#include <cmath>

#include "scint/errors.hpp"

namespace scint {

namespace {
constexpr double kNorm = 4.24; // plane-wave normalization making L -> 1
}

FirstOrderResult big_L(const DerivedParams& d, const PhysicalParams& p, double rel_tol) {
    if (!(rel_tol > 1e-10 && rel_tol < 1e-2))
        throw ValidationError("big_L: rel_tol must lie in (1e-10, 1e-2)");

    const double g = p.q0 * p.l0 * p.l0 / (4.0 * M_PI * M_PI * p.z);
    const double w = 4.0 + d.rho0_sq * d.rho1_sq;
    const double h = (d.rho0_sq + d.rho1_sq) / w;
    const double osc = 2.0 / w;

    FirstOrderResult out;
    if (g + h < 1e-12) {
        // Undamped plane-wave limit: the tau-averaged integral equals 1
        // analytically; the oscillatory tail converges only conditionally, so
        // it is not worth integrating.
        out.big_L = 1.0;
        out.sigma2_first = d.sigma1_sq;
        out.quadrature = {1.0, 0.0, 1, quad::Method::nested_2d};
        return out;
    }

    std::uint64_t evals = 0;
    auto inner = [&](double tau) {
        if (tau == 0.0) return 0.0;
        const double damp = g + tau * tau * h;
        const double phase1 = 0.5 * tau;        // tau chi^2/2
        const double phase2 = osc * tau * tau;  // 2 tau^2 chi^2/(4+rho0^2 rho1^2)
        auto f = [&](double chi) {
            ++evals;
            const double chi2 = chi * chi;
            const double s = std::sin((phase1 - phase2) * chi2);
            // chi^(-8/3) sin^2 ~ chi^(4/3) near 0: integrable with open rules
            return std::pow(chi, -8.0 / 3.0) * std::exp(-damp * chi2) * s * s;
        };
        // Mass extends to chi ~ 1/sqrt(damp + oscillation scale).
        const double scale = 2.0 / std::sqrt(damp + std::fabs(phase1 - phase2) + 1e-8);
        const auto axis = quad::Axis::semi_infinite_algebraic(0.0, scale);
        return quad::integrate_axis(f, axis, rel_tol * 0.5, 1e-300, 400000).value;
    };

    quad::QuadratureResult outer = quad::integrate_1d(inner, 0.0, 1.0, rel_tol, 1e-300, 200000);
    out.big_L = kNorm * outer.value;
    out.sigma2_first = d.sigma1_sq * out.big_L;
    out.quadrature = {out.big_L, kNorm * outer.abs_error, evals, quad::Method::nested_2d};
    if (!(out.big_L >= 0.0))
        throw InternalConsistencyError("big_L: integral of a nonnegative integrand came out negative");
    return out;
}

FirstOrderResult sigma2_first_order(const DerivedParams& d, const PhysicalParams& p,
                                    double rel_tol) {
    // L is purely geometric; sigma1^2 carries the Cn^2 linearity, so the
    // Cn^2 = 0 case falls out as sigma2_first = 0 with no special-casing.
    return big_L(d, p, rel_tol);
}

} // namespace scint
