#ifndef SCINT_SPECTRUM_HPP
#define SCINT_SPECTRUM_HPP

namespace scint {

struct PhysicalParams;

/// von Karman refractive-index fluctuation spectrum parameters.
/// inv_L0_sq = 0 encodes an infinite outer scale.
struct SpectrumParams {
    double cn2 = 0.0;       ///< m^(-2/3)
    double l0 = 0.0;        ///< m
    double inv_L0_sq = 0.0; ///< 1/m^2

    static SpectrumParams from(const PhysicalParams& p);
};

/// psi(k) = 0.033 Cn^2 exp(-(k l0 / 2 pi)^2) / (k^2 + L0^-2)^(11/6), m^3.
/// k = 0 with infinite outer scale is singular and throws.
double psi(double k, const SpectrumParams& s);

/// Collision-rate estimate nu = (2 pi omega0^2 / c) psi(k_char) k_char^2, 1/s.
double collision_frequency(const SpectrumParams& s, double omega0, double k_char);

} // namespace scint

#endif
