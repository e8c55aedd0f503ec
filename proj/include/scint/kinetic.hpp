#ifndef SCINT_KINETIC_HPP
#define SCINT_KINETIC_HPP

#include <functional>
#include <string>
#include <vector>

#include "scint/spectrum.hpp"

namespace scint {

/// Photon distribution sampled on a uniform transverse wave-vector grid
/// spanning [-q_max, q_max] per axis.
struct PdfGrid {
    int nx = 0, ny = 0;
    double qx_max = 0.0, qy_max = 0.0;
    std::vector<double> values; ///< row-major, values[j*nx + i]

    static PdfGrid make(int nx, int ny, double qx_max, double qy_max,
                        const std::function<double(double, double)>& f);

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
    double qx(int i) const { return -qx_max + 2.0 * qx_max * i / (nx - 1); }
    double qy(int j) const { return -qy_max + 2.0 * qy_max * j / (ny - 1); }
    double dqx() const { return 2.0 * qx_max / (nx - 1); }
    double dqy() const { return 2.0 * qy_max / (ny - 1); }

    /// Bilinear interpolation; points outside the grid read as zero.
    double interpolate(double qx, double qy) const;

    double max_abs() const;
    double boundary_max_abs() const;
    double grid_sum() const;

    /// CSV dump: x-index, y-index, value.
    void write_csv(const std::string& path) const;
};

/// Fixed-order quadrature nodes over the turbulence annulus
/// [2 pi / min(L0, 100 l0), 4 pi (2 pi / l0)]: 64 Gauss-Legendre nodes in
/// log k times 32 uniform angles. Weight includes k^2 psi(k) dlogk dphi.
struct AnnulusNode {
    double kx, ky, weight;
};
std::vector<AnnulusNode> collision_annulus(const SpectrumParams& s, double L0,
                                           int n_radial = 64, int n_angular = 32);

/// Collision-term field -nu{f} on the same grid:
///   -(2 pi omega0^2/c) Int d2k' psi(k') [f(q) - f(q + k')].
/// The grid sum of the output vanishes for compactly supported f (photon
/// number conservation). enforce_support toggles the boundary-leakage check.
PdfGrid apply_collision(const PdfGrid& g, const SpectrumParams& s, double omega0,
                        double L0, bool enforce_support = true, int threads = 1);

/// Diffusion-limit field (pi omega0^2 / 2c) [Int d2k' psi k'^2] Lap f with a
/// central-difference Laplacian; the k'^2 moment uses the same annulus so the
/// two operators share their spectral truncation.
PdfGrid apply_diffusion(const PdfGrid& g, const SpectrumParams& s, double omega0,
                        double L0, bool enforce_support = true, int threads = 1);

} // namespace scint

#endif
