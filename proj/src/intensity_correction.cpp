#include "scint/intensity_correction.hpp"

#include <algorithm>
#include <cmath>

#include "scint/errors.hpp"
#include "scint/spectrum.hpp"

namespace scint {

void i1_kprime_window(const PhysicalParams& p, double& kmin, double& kmax) {
    const double k_inner = 2.0 * M_PI / p.l0;
    const double k_outer = std::isinf(p.L0) ? 0.0 : 1.0 / p.L0;
    kmin = std::max(k_outer, 1e-4 * k_inner);
    kmax = 6.0 * k_inner;
}

IntensityCorrection intensity_correction_ratio(const DerivedParams& d,
                                               const PhysicalParams& p, double rel_tol) {
    if (!(rel_tol > 0.0)) throw ValidationError("intensity_correction_ratio: rel_tol > 0");

    IntensityCorrection out;
    if (p.cn2 == 0.0) {
        out.quadrature = {0.0, 0.0, 1, quad::Method::nested_2d};
        return out;
    }

    const SpectrumParams spec = SpectrumParams::from(p);
    const double denom = p.q0 * p.q0 * p.r0 * p.r0 * d.r1 * d.r1 + 4.0 * p.z * p.z;
    const double beta = 2.0 * d.r1 * d.r1 / denom; // displacement-over-width scale

    double kmin, kmax;
    i1_kprime_window(p, kmin, kmax);

    // Outer: log k'; inner: path position u = z - ct' (kick-to-detector lever arm).
    std::uint64_t evals = 0;
    auto outer = [&](double lk) {
        const double k = std::exp(lk);
        const double gamma = beta * k * k;
        auto fu = [&](double u) {
            ++evals;
            return 1.0 - std::exp(-gamma * u * u);
        };
        const double u_int =
            quad::integrate_1d(fu, 0.0, p.z, rel_tol * 0.5, 1e-300, 200000).value;
        return k * k * psi(k, spec) * u_int; // extra k from dk = k dlogk
    };
    quad::QuadratureResult q =
        quad::integrate_1d(outer, std::log(kmin), std::log(kmax), rel_tol, 1e-300, 400000);

    const double pref = -4.0 * M_PI * M_PI * p.q0 * p.q0;
    out.i1_ratio = pref * q.value;
    out.quadrature = {out.i1_ratio, std::fabs(pref) * q.abs_error, evals,
                      quad::Method::nested_2d};
    if (out.i1_ratio > 0.0)
        throw InternalConsistencyError(
            "intensity_correction_ratio: depletion integral came out positive");
    return out;
}

} // namespace scint
