#ifndef SCINT_FIRST_ORDER_HPP
#define SCINT_FIRST_ORDER_HPP

#include "scint/phys_params.hpp"
#include "scint/quadrature.hpp"

namespace scint {

/// Rytov-like first-order scintillation term.
struct FirstOrderResult {
    double big_L = 0.0;        ///< dimensionless aperture/inner-scale factor
    double sigma2_first = 0.0; ///< sigma1^2 * big_L
    quad::QuadratureResult quadrature;
};

/// The dimensionless double integral
///   L = 4.24 Int_0^1 dtau Int_0^inf dchi chi^(-8/3)
///       exp{-chi^2 [q0 l0^2/(4 pi^2 z) + tau^2 (rho0^2+rho1^2)/(4+rho0^2 rho1^2)]}
///       sin^2(tau chi^2/2 - 2 tau^2 chi^2/(4+rho0^2 rho1^2)),
/// chi inner (transformed semi-infinite), tau outer. In the plane-wave limit
/// (damping bracket < 1e-12) the exact value 1 is returned without integrating.
FirstOrderResult big_L(const DerivedParams& d, const PhysicalParams& p, double rel_tol);

FirstOrderResult sigma2_first_order(const DerivedParams& d, const PhysicalParams& p,
                                    double rel_tol);

} // namespace scint

#endif
