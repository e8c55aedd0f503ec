#include "scint/phys_params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "scint/errors.hpp"
#include "scint/spectrum.hpp"
#include "scint/util.hpp"

namespace scint {

namespace {

void require_positive_finite(double v, const char* name) {
    if (!(v > 0.0) || std::isinf(v) || std::isnan(v)) {
        std::ostringstream os;
        os << "parameter '" << name << "' must be positive and finite, got " << v;
        throw ValidationError(os.str());
    }
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || std::isnan(v)) {
        std::ostringstream os;
        os << "parameter '" << name << "' must be positive, got " << v;
        throw ValidationError(os.str());
    }
}

} // namespace

void PhysicalParams::validate() const {
    if (cn2 < 0.0 || std::isnan(cn2) || std::isinf(cn2)) {
        std::ostringstream os;
        os << "parameter 'cn2' must be finite and nonnegative, got " << cn2;
        throw ValidationError(os.str());
    }
    require_positive_finite(l0, "l0");
    require_positive(L0, "L0");          // may be inf
    require_positive_finite(q0, "q0");
    require_positive_finite(z, "z");
    require_positive_finite(r0, "r0");
    require_positive(lambda_c, "lambda_c"); // may be inf
    if (std::isfinite(L0) && !(l0 < L0))
        throw ValidationError("parameter 'l0' must be smaller than outer scale 'L0'");
}

DerivedParams derive_params(const PhysicalParams& p) {
    p.validate();
    DerivedParams d;
    d.sigma1_sq = 1.23 * p.cn2 * std::pow(p.q0, 7.0 / 6.0) * std::pow(p.z, 11.0 / 6.0);
    const double diffuser = std::isinf(p.lambda_c)
                                ? 1.0
                                : 1.0 + 2.0 * p.r0 * p.r0 / (p.lambda_c * p.lambda_c);
    d.r1 = p.r0 / std::sqrt(diffuser);
    d.rho0_sq = p.r0 * p.r0 * p.q0 / p.z;
    d.rho1_sq = d.r1 * d.r1 * p.q0 / p.z;
    d.t = p.z / kSpeedOfLight;
    d.omega0 = kSpeedOfLight * p.q0;
    return d;
}

RegimeReport validate_regime(const DerivedParams& d, const PhysicalParams& p) {
    RegimeReport r;
    r.sigma1_sq = d.sigma1_sq;
    r.within_moderate = d.sigma1_sq <= 0.85;
    r.within_rytov = d.sigma1_sq < 0.3;
    if (!r.within_moderate) {
        std::ostringstream os;
        os << "sigma1^2 = " << d.sigma1_sq
           << " exceeds the moderate-turbulence bound 0.85; the iterative "
              "scheme is untrusted here";
        r.messages.push_back(os.str());
    }

    // Paraxial sanity: q0 r0 >> 1, warning threshold 10.
    if (p.q0 * p.r0 < 10.0) {
        std::ostringstream os;
        os << "q0*r0 = " << p.q0 * p.r0 << " < 10; paraxial approximation is questionable";
        r.messages.push_back(os.str());
    }

    // Time hierarchy pi/ck' << t << 1/nu at the inner-scale wavenumber,
    // one order of magnitude on each side.
    const double k_char = 2.0 * M_PI / p.l0;
    const double t_eddy = M_PI / (kSpeedOfLight * k_char);
    const double nu = collision_frequency(SpectrumParams::from(p), d.omega0, k_char);
    const double t_relax = nu > 0.0 ? 1.0 / nu : std::numeric_limits<double>::infinity();
    r.time_hierarchy_ok = (10.0 * t_eddy <= d.t) && (10.0 * d.t <= t_relax);
    if (!r.time_hierarchy_ok) {
        std::ostringstream os;
        os << "time hierarchy pi/ck' << t << 1/nu marginal: pi/ck' = " << t_eddy
           << " s, t = " << d.t << " s, 1/nu = " << t_relax << " s";
        r.messages.push_back(os.str());
    }
    return r;
}

} // namespace scint
