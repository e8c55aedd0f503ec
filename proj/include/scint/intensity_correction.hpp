#ifndef SCINT_INTENSITY_CORRECTION_HPP
#define SCINT_INTENSITY_CORRECTION_HPP

#include "scint/phys_params.hpp"
#include "scint/quadrature.hpp"

namespace scint {

/// First-order collisional correction to the on-axis mean intensity.
struct IntensityCorrection {
    double i1_ratio = 0.0; ///< I1(0,z)/I0(0,z), <= 0
    quad::QuadratureResult quadrature;
};

/// Reduced form of the collision-term iteration: summing the kicked
/// trajectories in closed form leaves
///   i1 = -4 pi^2 q0^2 Int_0^z du Int dk' k' psi(k')
///        [1 - exp(-2 r1^2 u^2 k'^2 / (q0^2 r0^2 r1^2 + 4 z^2))],
/// i.e. the vacuum beam depleted by every kick k' received at distance z-u
/// from the detector. The path integral is kept numeric (shared code path
/// with the cross term); the k' radial integration runs over
/// [max(1/L0, 1e-4 2pi/l0), 6 2pi/l0] in log coordinates.
IntensityCorrection intensity_correction_ratio(const DerivedParams& d,
                                               const PhysicalParams& p, double rel_tol);

/// k'-integration window shared with the oracle tests.
void i1_kprime_window(const PhysicalParams& p, double& kmin, double& kmax);

} // namespace scint

#endif
