#ifndef SCINT_TEST_ORACLES_HPP
#define SCINT_TEST_ORACLES_HPP

#include <cstdint>

#include "scint/beam.hpp"
#include "scint/phys_params.hpp"

// Independent evaluation routes used to check the library's reduced
// implementations. Each deliberately avoids the code path it validates.
namespace scint::oracles {

/// Brute-force Monte Carlo of the unreduced 6D (q, k, k') sinc-form integral
/// for the mean-intensity correction ratio.
double i1_sinc_mc(const PhysicalParams& p, const DerivedParams& d, std::uint64_t samples,
                  std::uint64_t seed, double* standard_error);

/// Closed-form path integral (erf) with a single adaptive k' integral;
/// independent of the nested 2D route used by the library.
double i1_erf_form(const PhysicalParams& p, const DerivedParams& d);

/// Plain Monte Carlo of the first-order double integral.
double big_L_mc(const PhysicalParams& p, const DerivedParams& d, std::uint64_t samples,
                std::uint64_t seed, double* standard_error);

/// Truncated-lattice q,k summation of the free-streamed boundary correlator;
/// returns the intensity normalized to 1 on axis at the aperture.
double vacuum_intensity_lattice(double rx, double ry, double zdist, const BeamBoundary& b,
                                int n_per_dim);

/// Cross term restricted to a narrow radial window [klo, khi] for both k'
/// and k'': nested adaptive quadrature (3+2 split) and Monte Carlo on the
/// same integrand.
double cross_term_window_quad(const DerivedParams& d, const PhysicalParams& p, double klo,
                              double khi, double rel_tol, double* abs_error);
double cross_term_window_mc(const DerivedParams& d, const PhysicalParams& p, double klo,
                            double khi, std::uint64_t samples, std::uint64_t seed,
                            double* standard_error);

} // namespace scint::oracles

#endif
