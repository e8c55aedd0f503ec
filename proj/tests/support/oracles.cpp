#include "support/oracles.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "scint/cross_term.hpp"
#include "scint/intensity_correction.hpp"
#include "scint/quadrature.hpp"
#include "scint/spectrum.hpp"

namespace scint::oracles {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double sinc(double x) {
    if (std::fabs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}
} // namespace

double i1_sinc_mc(const PhysicalParams& p, const DerivedParams& d, std::uint64_t samples,
                  std::uint64_t seed, double* standard_error) {
    const SpectrumParams spec = SpectrumParams::from(p);
    const double r0 = p.r0, r1 = d.r1, q0 = p.q0, z = p.z;
    const double lam = z / q0;
    const double J0 = 4.0 * M_PI * M_PI / (r0 * r0 * r1 * r1 / 4.0 + lam * lam);

    double kmin, kmax;
    i1_kprime_window(p, kmin, kmax);

    quad::Domain dom;
    dom.axes = {quad::Axis::gaussian_line(1.0 / r1),  // qx
                quad::Axis::gaussian_line(1.0 / r1),  // qy
                quad::Axis::gaussian_line(2.0 / r0),  // kx
                quad::Axis::gaussian_line(2.0 / r0),  // ky
                quad::Axis::finite(std::log(kmin), std::log(kmax)),
                quad::Axis::finite(0.0, kTwoPi)};

    auto f = [&](const double* x) {
        const double qx = x[0], qy = x[1], kx = x[2], ky = x[3];
        const double kp = std::exp(x[4]);
        const double phi = x[5];
        const double kq = kx * qx + ky * qy;
        const double kkp = kp * (kx * std::cos(phi) + ky * std::sin(phi));
        const double gauss = std::exp(-0.5 * (qx * qx + qy * qy) * r1 * r1 -
                                      (kx * kx + ky * ky) * r0 * r0 / 8.0);
        return std::cos(lam * kq) * (1.0 - sinc(lam * kkp)) * psi(kp, spec) * gauss * kp * kp;
    };

    quad::McOptions opts;
    opts.sample_count = samples;
    opts.seed = seed;
    const auto r = quad::mc_integrate(f, dom, opts);
    const double pref = -kTwoPi * q0 * q0 * z / J0;
    if (standard_error) *standard_error = std::fabs(pref) * r.abs_error;
    return pref * r.value;
}

double i1_erf_form(const PhysicalParams& p, const DerivedParams& d) {
    const SpectrumParams spec = SpectrumParams::from(p);
    const double denom = p.q0 * p.q0 * p.r0 * p.r0 * d.r1 * d.r1 + 4.0 * p.z * p.z;
    const double beta = 2.0 * d.r1 * d.r1 / denom;
    double kmin, kmax;
    i1_kprime_window(p, kmin, kmax);
    auto f = [&](double lk) {
        const double k = std::exp(lk);
        const double gamma = beta * k * k;
        const double sg = std::sqrt(gamma);
        const double u_int = p.z - 0.5 * std::sqrt(M_PI) * std::erf(sg * p.z) / sg;
        return k * k * psi(k, spec) * u_int;
    };
    const auto q = quad::integrate_1d(f, std::log(kmin), std::log(kmax), 1e-10, 1e-300);
    return -4.0 * M_PI * M_PI * p.q0 * p.q0 * q.value;
}

double big_L_mc(const PhysicalParams& p, const DerivedParams& d, std::uint64_t samples,
                std::uint64_t seed, double* standard_error) {
    const double g = p.q0 * p.l0 * p.l0 / (4.0 * M_PI * M_PI * p.z);
    const double w = 4.0 + d.rho0_sq * d.rho1_sq;
    const double h = (d.rho0_sq + d.rho1_sq) / w;
    const double osc = 2.0 / w;
    quad::Domain dom;
    dom.axes = {quad::Axis::finite(0.0, 1.0), quad::Axis::semi_infinite_algebraic(0.0, 1.0)};
    auto f = [&](const double* x) {
        const double tau = x[0], chi = x[1];
        if (chi == 0.0) return 0.0;
        const double chi2 = chi * chi;
        const double s = std::sin(tau * chi2 / 2.0 - osc * tau * tau * chi2);
        return std::pow(chi, -8.0 / 3.0) * std::exp(-(g + tau * tau * h) * chi2) * s * s;
    };
    quad::McOptions opts;
    opts.sample_count = samples;
    opts.seed = seed;
    const auto r = quad::mc_integrate(f, dom, opts);
    if (standard_error) *standard_error = 4.24 * r.abs_error;
    return 4.24 * r.value;
}

double vacuum_intensity_lattice(double rx, double ry, double zdist, const BeamBoundary& b,
                                int n) {
    // I0(r, z) ~ Sum_k e^{-k^2 r0^2/8} e^{i k.r} S(kx) S(ky),
    // S(kx) = Sum_qx e^{-qx^2 r1^2/2} e^{-i kx qx z/q0}: the full q,k lattice
    // sum of the boundary correlator, organized separably.
    const double qext = 6.0 / b.r1;
    const double kext = 6.0 * (2.0 / b.r0) * 1.5;
    const double dq = 2.0 * qext / n;
    const double dk = 2.0 * kext / n;
    const double lam = zdist / b.q0;

    std::vector<std::complex<double>> S(n);
    for (int a = 0; a < n; ++a) {
        const double k = -kext + dk * (a + 0.5);
        std::complex<double> acc(0.0, 0.0);
        for (int m = 0; m < n; ++m) {
            const double q = -qext + dq * (m + 0.5);
            acc += std::exp(std::complex<double>(-0.5 * q * q * b.r1 * b.r1, -k * q * lam));
        }
        S[a] = acc * dq;
    }
    auto eval = [&](double x, double y) {
        std::complex<double> total(0.0, 0.0);
        for (int ax = 0; ax < n; ++ax) {
            const double kx = -kext + dk * (ax + 0.5);
            std::complex<double> row(0.0, 0.0);
            for (int ay = 0; ay < n; ++ay) {
                const double ky = -kext + dk * (ay + 0.5);
                row += std::exp(std::complex<double>(-(kx * kx + ky * ky) * b.r0 * b.r0 / 8.0,
                                                     kx * x + ky * y)) *
                       S[ay];
            }
            total += row * S[ax];
        }
        return total.real() * dk * dk;
    };
    const double raw = eval(rx, ry);

    // normalize to 1 on axis at the aperture (z enters through S; recompute)
    std::vector<std::complex<double>> S0(n);
    for (int a = 0; a < n; ++a) {
        const double k = -kext + dk * (a + 0.5);
        std::complex<double> acc(0.0, 0.0);
        for (int m = 0; m < n; ++m) {
            const double q = -qext + dq * (m + 0.5);
            acc += std::exp(std::complex<double>(-0.5 * q * q * b.r1 * b.r1, 0.0)) *
                   std::exp(std::complex<double>(0.0, -k * q * 0.0));
        }
        S0[a] = acc * dq;
    }
    double norm = 0.0;
    for (int ax = 0; ax < n; ++ax) {
        const double kx = -kext + dk * (ax + 0.5);
        double row = 0.0;
        for (int ay = 0; ay < n; ++ay) {
            const double ky = -kext + dk * (ay + 0.5);
            row += std::exp(-(kx * kx + ky * ky) * b.r0 * b.r0 / 8.0) * S0[ay].real();
        }
        norm += row * S0[ax].real();
    }
    norm *= dk * dk;
    return raw / norm;
}

namespace {

// Shared shrunken-instance integrand: the cross-term measure restricted to a
// narrow radial window, as a function of (u, v, log k', log k'', phi).
struct WindowIntegrand {
    CrossTermKernel kernel;
    SpectrumParams spec;
    double z;

    double operator()(const double* x) const {
        const double zeta = z * x[0];
        const double zeta1 = zeta + (z - zeta) * x[1];
        const double jac_t = z * (z - zeta);
        const double kp = std::exp(x[2]);
        const double kpp = std::exp(x[3]);
        const double phi = x[4];
        const std::complex<double> W = kernel.reduced_w(zeta, zeta1, kp, kpp, phi);
        // extra kp*kpp from the log-radial jacobians
        return jac_t * kTwoPi * kp * kp * psi(kp, spec) * kpp * kpp * psi(kpp, spec) *
               W.real();
    }
};

} // namespace

double cross_term_window_quad(const DerivedParams& d, const PhysicalParams& p, double klo,
                              double khi, double rel_tol, double* abs_error) {
    const WindowIntegrand f{CrossTermKernel::from(d, p), SpectrumParams::from(p), p.z};
    quad::Domain outer3;
    outer3.axes = {quad::Axis::finite(0.0, 1.0), quad::Axis::finite(0.0, 1.0),
                   quad::Axis::finite(std::log(klo), std::log(khi))};
    quad::Domain inner2;
    inner2.axes = {quad::Axis::finite(std::log(klo), std::log(khi)),
                   quad::Axis::finite(0.0, kTwoPi)};
    double inner_err_max = 0.0;
    auto g = [&](const double* y) {
        auto h = [&](const double* w) {
            const double x[5] = {y[0], y[1], y[2], w[0], w[1]};
            return f(x);
        };
        const auto r = quad::integrate_nd(h, inner2, rel_tol, 2'000'000);
        inner_err_max = std::max(inner_err_max, r.abs_error);
        return r.value;
    };
    const auto r = quad::integrate_nd(g, outer3, rel_tol, 2'000'000);
    if (abs_error)
        *abs_error = f.kernel.pref * (r.abs_error + inner_err_max * std::log(khi / klo));
    return f.kernel.pref * r.value;
}

double cross_term_window_mc(const DerivedParams& d, const PhysicalParams& p, double klo,
                            double khi, std::uint64_t samples, std::uint64_t seed,
                            double* standard_error) {
    const WindowIntegrand f{CrossTermKernel::from(d, p), SpectrumParams::from(p), p.z};
    quad::Domain dom;
    dom.axes = {quad::Axis::finite(0.0, 1.0), quad::Axis::finite(0.0, 1.0),
                quad::Axis::finite(std::log(klo), std::log(khi)),
                quad::Axis::finite(std::log(klo), std::log(khi)),
                quad::Axis::finite(0.0, kTwoPi)};
    quad::McOptions opts;
    opts.sample_count = samples;
    opts.seed = seed;
    opts.strata = {8, 8, 4, 4, 2};
    const auto r = quad::mc_integrate([&](const double* x) { return f(x); }, dom, opts);
    if (standard_error) *standard_error = f.kernel.pref * r.abs_error;
    return f.kernel.pref * r.value;
}

} // namespace scint::oracles
