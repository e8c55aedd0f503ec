#ifndef SCINT_BEAM_HPP
#define SCINT_BEAM_HPP

namespace scint {

struct PhysicalParams;
struct DerivedParams;

/// Aperture-plane beam description in normalized units: the boundary PDF
/// peak and the on-axis aperture intensity are both 1, so every constant
/// that cancels in the scintillation-index ratio is dropped at the source.
struct BeamBoundary {
    double r0 = 0.0; ///< aperture radius, m (sets the r-width)
    double r1 = 0.0; ///< partially-coherent radius, m (sets the q-width)
    double q0 = 0.0; ///< central wavenumber, 1/m

    static BeamBoundary from(const PhysicalParams& p, const DerivedParams& d);
};

/// Boundary photon distribution exp(-q^2 r1^2/2 - 2 r^2/r0^2), peak 1.
/// The diffuser widens the momentum factor only; the spatial profile keeps r0.
double boundary_pdf(double qx, double qy, double rx, double ry, const BeamBoundary& b);

/// Vacuum-propagated on-beam intensity at transverse radius |r_perp|,
/// normalized to 1 on axis at the aperture. Closed form of the free-streaming
/// momentum sum over the boundary distribution:
///   I0(r, z) = A exp(-2 r^2 / w^2),  A = q0^2 r0^2 r1^2 / (q0^2 r0^2 r1^2 + 4 z^2),
///   w^2 = r0^2 + 4 z^2 / (q0^2 r1^2).
double vacuum_intensity(double rx, double ry, double z, const BeamBoundary& b);

/// Squared 1/e^2 beam radius w^2(z); exposed for the displaced-beam integrands.
double beam_width_sq(double z, const BeamBoundary& b);

} // namespace scint

#endif
