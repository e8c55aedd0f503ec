#include "scint/cross_term.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "scint/errors.hpp"
#include "scint/intensity_correction.hpp"
#include "scint/spectrum.hpp"

namespace scint {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

std::vector<std::uint32_t> default_strata(std::uint64_t samples) {
    // Aim for >= 32 samples per stratum; ordering matches the axis order
    // {zeta, zeta1, k', k'', phi}.
    std::vector<std::uint32_t> s = {8, 8, 4, 4, 2};
    auto product = [&s] {
        std::uint64_t p = 1;
        for (auto v : s) p *= v;
        return p;
    };
    while (product() > std::max<std::uint64_t>(1, samples / 32)) {
        auto it = std::max_element(s.begin(), s.end());
        if (*it == 1) break;
        *it /= 2;
    }
    return s;
}

} // namespace

CrossTermKernel CrossTermKernel::from(const DerivedParams& d, const PhysicalParams& pp) {
    CrossTermKernel k;
    k.z = pp.z;
    k.q0 = pp.q0;
    k.p = 0.5 * d.r1 * d.r1;
    k.s = pp.r0 * pp.r0 / 8.0;
    const double lam_z = pp.z / pp.q0;
    const double J0 = 4.0 * M_PI * M_PI / (4.0 * k.s * k.p + lam_z * lam_z);
    k.pref = 8.0 * M_PI * M_PI * std::pow(pp.q0, 4) / (J0 * J0);
    return k;
}

std::complex<double> CrossTermKernel::block(double lambda, double aKx, double aKy,
                                            double aQx, double aQy) const {
    const double D = 4.0 * s * p + lambda * lambda;
    const double aK2 = aKx * aKx + aKy * aKy;
    const double aQ2 = aQx * aQx + aQy * aQy;
    const double dot = aQx * aKx + aQy * aKy;
    const std::complex<double> arg(-(p / D) * aK2 - (s / D) * aQ2, -(lambda / D) * dot);
    return 4.0 * M_PI * M_PI / D * std::exp(arg);
}

std::complex<double> CrossTermKernel::reduced_w(double zeta, double zeta1, double kp,
                                                double kpp, double phi) const {
    // k'' along x by the overall rotational symmetry; phi is the relative angle.
    const double lt = zeta / q0;
    const double lt1 = zeta1 / q0;
    const double kpx = kp * std::cos(phi);
    const double kpy = kp * std::sin(phi);
    const double kdot = kpp * kpx; // k''.k'
    std::complex<double> W(0.0, 0.0);
    for (int s1 = 0; s1 <= 1; ++s1) {
        for (int s2 = 0; s2 <= 1; ++s2) {
            for (int s3 = 0; s3 <= 1; ++s3) {
                const double sign = ((s1 + s2 + s3) & 1) ? -1.0 : 1.0;
                const double cK = s2 * lt1 - 0.5 * lt;
                const double aKx = cK * kpp - s1 * lt * kpx;
                const double aKy = -s1 * lt * kpy;
                const double aQx = lt * kpp;
                const std::complex<double> z1 = block(lt, aKx, aKy, aQx, 0.0);
                const double aK1x = lt1 * (0.5 - s3) * kpp;
                const double aQ1x = -lt1 * kpp;
                const std::complex<double> z2 = block(lt1, aK1x, 0.0, aQ1x, 0.0);
                const double phic = kpp * kpp * (-0.5 * lt - 0.5 * lt1 + s2 * lt1 + s3 * lt1) -
                                    s1 * lt * kdot;
                W += sign * z1 * z2 * std::exp(std::complex<double>(0.0, phic));
            }
        }
    }
    return W;
}

CrossTermResult cross_term_ratio(const DerivedParams& d, const PhysicalParams& pp,
                                 const quad::McOptions& opts) {
    CrossTermResult out;
    out.sample_seed = opts.seed;
    if (pp.cn2 == 0.0) {
        out.quadrature = {0.0, 0.0, 1, quad::Method::monte_carlo};
        return out;
    }

    const SpectrumParams spec = SpectrumParams::from(pp);
    const CrossTermKernel kernel = CrossTermKernel::from(d, pp);

    double kmin, kmax;
    i1_kprime_window(pp, kmin, kmax);

    // Radial proposal: the spectrum's own k psi(k) mass (power-law with
    // Gaussian cutoff), unless the caller asked for uniform sampling.
    quad::Axis radial;
    if (opts.importance == "uniform") {
        radial = quad::Axis::finite(kmin, kmax);
    } else if (opts.importance == "gaussian-radial") {
        radial = quad::Axis::rayleigh_radial(2.0 * M_PI / pp.l0);
    } else { // "power-law-radial" (default)
        const int nbins = 256;
        std::vector<double> edges(nbins + 1), density(nbins);
        const double lmin = std::log(kmin), lmax = std::log(kmax);
        for (int i = 0; i <= nbins; ++i)
            edges[i] = std::exp(lmin + (lmax - lmin) * i / nbins);
        for (int i = 0; i < nbins; ++i) {
            const double kc = std::sqrt(edges[i] * edges[i + 1]);
            density[i] = kc * psi(kc, spec);
        }
        radial = quad::Axis::tabulated_radial(std::move(edges), std::move(density));
    }

    quad::Domain domain;
    domain.axes = {quad::Axis::finite(0.0, 1.0), quad::Axis::finite(0.0, 1.0), radial, radial,
                   quad::Axis::finite(0.0, kTwoPi)};

    quad::McOptions mc = opts;
    if (mc.strata.empty()) mc.strata = default_strata(mc.sample_count);

    const double z = pp.z;
    auto f = [&](const double* x, double* o) {
        const double zeta = z * x[0];
        const double zeta1 = zeta + (z - zeta) * x[1];
        const double jac_t = z * (z - zeta); // ordered-time mapping
        const double kp = x[2];
        const double kpp = x[3];
        const double phi = x[4];
        const std::complex<double> W = kernel.reduced_w(zeta, zeta1, kp, kpp, phi);
        // d2k' d2k'' = (2 pi overall angle) k' dk' k'' dk'' dphi
        const double measure = jac_t * kTwoPi * kp * psi(kp, spec) * kpp * psi(kpp, spec);
        o[0] = measure * W.real();
        o[1] = measure * W.imag();
    };

    const auto res = quad::mc_integrate_multi(f, 2, domain, mc);
    out.x2_ratio = kernel.pref * res[0].value;
    out.quadrature = {out.x2_ratio, kernel.pref * res[0].abs_error, res[0].evaluations,
                      quad::Method::monte_carlo};
    out.im_part = kernel.pref * res[1].value;
    out.im_part_err = kernel.pref * res[1].abs_error;
    out.precision_flag =
        out.quadrature.abs_error > 0.02 * std::fabs(out.x2_ratio);
    return out;
}

} // namespace scint
