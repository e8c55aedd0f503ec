#ifndef SCINT_PHYS_PARAMS_HPP
#define SCINT_PHYS_PARAMS_HPP

#include <string>
#include <vector>

namespace scint {

/// User-facing description of one atmospheric channel. Outer scale L0 and
/// diffuser coherence length lambda_c may be infinite.
struct PhysicalParams {
    double cn2 = 0.0;       ///< structure constant, m^(-2/3)
    double l0 = 0.0;        ///< inner scale, m
    double L0 = 0.0;        ///< outer scale, m (may be inf)
    double q0 = 0.0;        ///< central wavenumber, 1/m
    double z = 0.0;         ///< propagation distance, m
    double r0 = 0.0;        ///< aperture radius, m
    double lambda_c = 0.0;  ///< phase-diffuser coherence length, m (may be inf)

    /// Throws ValidationError naming the first offending field.
    void validate() const;
};

/// Scales derived once and consumed by every integrand.
struct DerivedParams {
    double sigma1_sq = 0.0; ///< Rytov variance
    double rho0_sq = 0.0;   ///< r0^2 q0 / z
    double rho1_sq = 0.0;   ///< r1^2 q0 / z
    double r1 = 0.0;        ///< effective partially-coherent radius, m
    double t = 0.0;         ///< propagation time z/c, s
    double omega0 = 0.0;    ///< c q0, rad/s
};

struct RegimeReport {
    double sigma1_sq = 0.0;
    bool within_moderate = false;   ///< sigma1^2 <= 0.85
    bool within_rytov = false;      ///< sigma1^2 < 0.3
    bool time_hierarchy_ok = false; ///< pi/ck' << t << 1/nu at k' = 2 pi / l0
    std::vector<std::string> messages;
};

DerivedParams derive_params(const PhysicalParams& p);

/// Diagnostics only; never blocks computation.
RegimeReport validate_regime(const DerivedParams& d, const PhysicalParams& p);

} // namespace scint

#endif
