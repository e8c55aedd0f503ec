#include "scint/beam.hpp"

#include <cmath>

#include "scint/errors.hpp"
#include "scint/phys_params.hpp"

namespace scint {

BeamBoundary BeamBoundary::from(const PhysicalParams& p, const DerivedParams& d) {
    BeamBoundary b;
    b.r0 = p.r0;
    b.r1 = d.r1;
    b.q0 = p.q0;
    if (!(b.r1 > 0.0) || b.r1 > b.r0)
        throw ValidationError("BeamBoundary: requires 0 < r1 <= r0");
    return b;
}

double boundary_pdf(double qx, double qy, double rx, double ry, const BeamBoundary& b) {
    const double q2 = qx * qx + qy * qy;
    const double r2 = rx * rx + ry * ry;
    return std::exp(-0.5 * q2 * b.r1 * b.r1 - 2.0 * r2 / (b.r0 * b.r0));
}

double beam_width_sq(double z, const BeamBoundary& b) {
    return b.r0 * b.r0 + 4.0 * z * z / (b.q0 * b.q0 * b.r1 * b.r1);
}

double vacuum_intensity(double rx, double ry, double z, const BeamBoundary& b) {
    if (z < 0.0) throw ValidationError("vacuum_intensity: z must be nonnegative");
    const double r2 = rx * rx + ry * ry;
    const double w2 = beam_width_sq(z, b);
    const double amplitude = b.r0 * b.r0 / w2; // = q0^2 r0^2 r1^2/(q0^2 r0^2 r1^2 + 4 z^2)
    return amplitude * std::exp(-2.0 * r2 / w2);
}

} // namespace scint
