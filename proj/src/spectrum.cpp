#include "scint/spectrum.hpp"

#include <cmath>

#include "scint/errors.hpp"
#include "scint/phys_params.hpp"
#include "scint/util.hpp"

namespace scint {

SpectrumParams SpectrumParams::from(const PhysicalParams& p) {
    SpectrumParams s;
    s.cn2 = p.cn2;
    s.l0 = p.l0;
    s.inv_L0_sq = std::isinf(p.L0) ? 0.0 : 1.0 / (p.L0 * p.L0);
    return s;
}

double psi(double k, const SpectrumParams& s) {
    if (k < 0.0) throw ValidationError("psi: k must be nonnegative");
    const double denom = k * k + s.inv_L0_sq;
    if (denom == 0.0)
        throw SingularInputError("psi: k = 0 with infinite outer scale is singular");
    const double arg = k * s.l0 / (2.0 * M_PI);
    return 0.033 * s.cn2 * std::exp(-arg * arg) / std::pow(denom, 11.0 / 6.0);
}

double collision_frequency(const SpectrumParams& s, double omega0, double k_char) {
    if (!(k_char > 0.0)) throw ValidationError("collision_frequency: k_char must be positive");
    return 2.0 * M_PI * omega0 * omega0 / kSpeedOfLight * psi(k_char, s) * k_char * k_char;
}

} // namespace scint
