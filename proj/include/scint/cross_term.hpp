#ifndef SCINT_CROSS_TERM_HPP
#define SCINT_CROSS_TERM_HPP

#include <complex>
#include <cstdint>

#include "scint/phys_params.hpp"
#include "scint/quadrature.hpp"

namespace scint {

/// Second-order fluctuation cross contribution 2 Sum<df1 df2> / I0^2.
struct CrossTermResult {
    double x2_ratio = 0.0;
    quad::QuadratureResult quadrature; ///< abs_error = MC standard error of x2_ratio
    std::uint64_t sample_seed = 0;
    double im_part = 0.0;       ///< residual imaginary part (diagnostic)
    double im_part_err = 0.0;
    bool precision_flag = false; ///< set when std error > 2% of |x2_ratio|
};

/// Fixed-coefficient description of one channel for the cross-term integrand;
/// groups everything the reduced kernel needs.
struct CrossTermKernel {
    double z = 0.0;
    double q0 = 0.0;
    double p = 0.0;  ///< r1^2/2 (mean-momentum Gaussian)
    double s = 0.0;  ///< r0^2/8 (envelope Gaussian)
    double pref = 0.0; ///< 8 pi^2 q0^4 / J0^2

    static CrossTermKernel from(const DerivedParams& d, const PhysicalParams& p);

    /// Closed-form Gaussian block Z(lambda, a_K, a_Q) of the (q,k) sums.
    std::complex<double> block(double lambda, double aKx, double aKy, double aQx,
                               double aQy) const;

    /// The (zeta, zeta1, k', k'', phi) integrand after the four transverse
    /// sums are done in closed form: returns the complex W-sum times the
    /// measure factors (excluding the spectra and the time-ordering
    /// jacobian, which the caller supplies).
    std::complex<double> reduced_w(double zeta, double zeta1, double kp, double kpp,
                                   double phi) const;
};

/// Stratified Monte Carlo over {zeta, zeta1 (ordered), k', k'', phi} with the
/// spectrum-shaped radial proposal. x2 takes the real part of the symmetrized
/// correlator; the imaginary remainder is reported as a diagnostic.
CrossTermResult cross_term_ratio(const DerivedParams& d, const PhysicalParams& p,
                                 const quad::McOptions& opts);

} // namespace scint

#endif
