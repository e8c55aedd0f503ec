#ifndef SCINT_QUADRATURE_HPP
#define SCINT_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scint/errors.hpp"

namespace scint::quad {

enum class Method { adaptive_1d, nested_2d, nested_3d, monte_carlo };

const char* method_name(Method m);

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;       ///< error estimate (adaptive) or standard error (MC)
    std::uint64_t evaluations = 0;
    Method method = Method::adaptive_1d;
};

/// Coordinate map from the unit interval onto one integration axis.
/// Deterministic rules accept linear/algebraic/exponential; the remaining
/// maps are sampling proposals for the Monte Carlo engine.
enum class Transform {
    linear,       ///< x = lo + (hi-lo) u
    algebraic,    ///< x = lo + scale u/(1-u), semi-infinite, power-law tails
    exponential,  ///< x = lo - scale ln(1-u), semi-infinite, exponential tails
    gaussian,     ///< full line, N(0, scale); MC proposal
    rayleigh,     ///< radial >= 0, p(x) ~ x exp(-x^2/2 scale^2); MC proposal
    tabulated     ///< histogram density on given edges; MC proposal
};

struct Axis {
    double lo = 0.0;
    double hi = 1.0;                 // ignored by semi-infinite/line transforms
    Transform transform = Transform::linear;
    double scale = 1.0;
    std::vector<double> edges;       // tabulated: ascending bin edges
    std::vector<double> density;     // tabulated: per-bin density (unnormalized)
    std::vector<double> cdf;         // tabulated: built by mc_integrate on first use

    static Axis finite(double lo, double hi);
    static Axis semi_infinite_algebraic(double lo, double scale);
    static Axis semi_infinite_exponential(double lo, double scale);
    static Axis gaussian_line(double sigma);
    static Axis rayleigh_radial(double sigma);
    static Axis tabulated_radial(std::vector<double> edges, std::vector<double> bin_density);

    /// Map u in (0,1) to a coordinate and the Jacobian (or 1/pdf) weight.
    void map(double u, double& x, double& w) const;
};

struct Domain {
    std::vector<Axis> axes;
    std::size_t dim() const { return axes.size(); }
};

struct McOptions {
    std::uint64_t sample_count = 1'000'000;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> strata;  ///< per-dimension strata counts (empty = none)
    std::string importance = "uniform"; ///< named weight, recorded for audit/caching
    int threads = 1;
};

using Fn1d = std::function<double(double)>;
using FnNd = std::function<double(const double*)>;
/// Multi-output integrand sharing one sample stream: f(x, out[0..n_out)).
using FnMulti = std::function<void(const double*, double*)>;

/// Adaptive Gauss-Kronrod 15(7) on a finite interval.
QuadratureResult integrate_1d(const Fn1d& f, double a, double b,
                              double rel_tol, double abs_tol,
                              std::uint64_t max_evals = 1'000'000);

/// Same engine on a transformed axis (semi-infinite domains permitted).
QuadratureResult integrate_axis(const Fn1d& f, const Axis& axis,
                                double rel_tol, double abs_tol,
                                std::uint64_t max_evals = 1'000'000);

/// Nested adaptive integration, dimension 1..3. Inner tolerances are
/// tightened by half per level; the reported error is the outer estimate.
QuadratureResult integrate_nd(const FnNd& f, const Domain& d, double rel_tol,
                              std::uint64_t max_evals_per_axis = 1'000'000);

/// Stratified Monte Carlo with per-axis proposal maps. The estimate and its
/// standard error are exact functions of (integrand, domain, options): the
/// substream for a stratum is derived from (seed, stratum index) alone and
/// partial sums are combined in a fixed order, so results are bit-identical
/// for any thread count.
QuadratureResult mc_integrate(const FnNd& f, const Domain& d, const McOptions& opts);

/// As mc_integrate but evaluates n_out components on shared samples.
std::vector<QuadratureResult> mc_integrate_multi(const FnMulti& f, std::size_t n_out,
                                                 const Domain& d, const McOptions& opts);

/// Inverse standard normal CDF (Acklam rational fit polished by one
/// Halley step); used by the gaussian proposal map.
double inverse_normal_cdf(double u);

} // namespace scint::quad

#endif
