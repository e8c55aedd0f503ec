#include "scint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "scint/rng.hpp"
#include "scint/util.hpp"

namespace scint::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Kronrod nodes on [-1,1] (positive half) with Kronrod weights,
// and the embedded 7-point Gauss weights (QUADPACK qk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
    bool splittable;
    bool operator<(const Segment& o) const { return error < o.error; }
};

[[noreturn]] void throw_nan(double x) {
    std::ostringstream os;
    os << "integrand returned NaN at x = " << x;
    throw NanSampleError(os.str());
}

Segment gk15(const Fn1d& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = 0.0, resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double s = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
        const double sa = (i == 7) ? std::fabs(fv[7]) : std::fabs(fv[i]) + std::fabs(fv[14 - i]);
        resk += kWgk[i] * s;
        resabs += kWgk[i] * sa;
    }
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    resasc *= h;
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double value = resk * h;
    if (std::isnan(value)) throw_nan(c);
    return Segment{a, b, value, err, true};
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::adaptive_1d: return "adaptive-1d";
        case Method::nested_2d: return "nested-2d";
        case Method::nested_3d: return "nested-3d";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

Axis Axis::finite(double lo, double hi) {
    Axis a;
    a.lo = lo;
    a.hi = hi;
    a.transform = Transform::linear;
    return a;
}

Axis Axis::semi_infinite_algebraic(double lo, double scale) {
    Axis a;
    a.lo = lo;
    a.hi = std::numeric_limits<double>::infinity();
    a.transform = Transform::algebraic;
    a.scale = scale;
    return a;
}

Axis Axis::semi_infinite_exponential(double lo, double scale) {
    Axis a;
    a.lo = lo;
    a.hi = std::numeric_limits<double>::infinity();
    a.transform = Transform::exponential;
    a.scale = scale;
    return a;
}

Axis Axis::gaussian_line(double sigma) {
    Axis a;
    a.lo = -std::numeric_limits<double>::infinity();
    a.hi = std::numeric_limits<double>::infinity();
    a.transform = Transform::gaussian;
    a.scale = sigma;
    return a;
}

Axis Axis::rayleigh_radial(double sigma) {
    Axis a;
    a.lo = 0.0;
    a.hi = std::numeric_limits<double>::infinity();
    a.transform = Transform::rayleigh;
    a.scale = sigma;
    return a;
}

Axis Axis::tabulated_radial(std::vector<double> edges, std::vector<double> bin_density) {
    if (edges.size() < 2 || bin_density.size() + 1 != edges.size())
        throw ValidationError("tabulated axis: need n+1 edges for n bin densities");
    Axis a;
    a.lo = edges.front();
    a.hi = edges.back();
    a.transform = Transform::tabulated;
    a.edges = std::move(edges);
    a.density = std::move(bin_density);
    a.cdf.resize(a.density.size() + 1);
    a.cdf[0] = 0.0;
    for (std::size_t i = 0; i < a.density.size(); ++i) {
        if (!(a.density[i] > 0.0))
            throw ValidationError("tabulated axis: bin densities must be positive");
        a.cdf[i + 1] = a.cdf[i] + a.density[i] * (a.edges[i + 1] - a.edges[i]);
    }
    const double total = a.cdf.back();
    for (auto& c : a.cdf) c /= total;
    for (auto& d : a.density) d /= total;
    return a;
}

double inverse_normal_cdf(double u) {
    // Acklam's rational approximation with one Halley refinement.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (u < plow) {
        const double q = std::sqrt(-2.0 * std::log(u));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - plow) {
        const double q = u - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - u;
    const double w = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
    return x - w / (1.0 + 0.5 * x * w); // Halley step
}

void Axis::map(double u, double& x, double& w) const {
    switch (transform) {
        case Transform::linear:
            x = lo + (hi - lo) * u;
            w = hi - lo;
            return;
        case Transform::algebraic: {
            const double om = 1.0 - u;
            x = lo + scale * u / om;
            w = scale / (om * om);
            return;
        }
        case Transform::exponential: {
            const double om = 1.0 - u;
            x = lo - scale * std::log(om);
            w = scale / om;
            return;
        }
        case Transform::gaussian: {
            x = scale * inverse_normal_cdf(u);
            w = scale * std::sqrt(2.0 * kPi) * std::exp(0.5 * (x / scale) * (x / scale));
            return;
        }
        case Transform::rayleigh: {
            x = scale * std::sqrt(-2.0 * std::log(1.0 - u));
            const double pdf = x / (scale * scale) * std::exp(-0.5 * (x / scale) * (x / scale));
            w = 1.0 / pdf;
            return;
        }
        case Transform::tabulated: {
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
                1, std::distance(cdf.begin(), it)));
            i = std::min(i, density.size()) - 1;
            const double frac = (u - cdf[i]) / (cdf[i + 1] - cdf[i]);
            x = edges[i] + frac * (edges[i + 1] - edges[i]);
            w = 1.0 / density[i];
            return;
        }
    }
    throw ValidationError("unknown axis transform");
}

QuadratureResult integrate_1d(const Fn1d& f, double a, double b,
                              double rel_tol, double abs_tol,
                              std::uint64_t max_evals) {
    if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
        throw ValidationError("integrate_1d: tolerances must be positive");
    if (!(a < b)) throw ValidationError("integrate_1d: requires a < b");

    std::priority_queue<Segment> heap;
    std::uint64_t evals = 15;
    heap.push(gk15(f, a, b));
    double total = heap.top().value;
    double toterr = heap.top().error;
    const double min_width = 1e-14 * (b - a);

    while (toterr > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (heap.empty()) break;
        Segment worst = heap.top();
        if (!worst.splittable) break; // everything at roundoff width
        heap.pop();
        if (worst.b - worst.a < min_width) {
            worst.splittable = false;
            heap.push(worst);
            // re-check: if the new top is unsplittable too, all are
            if (!heap.top().splittable) break;
            continue;
        }
        if (evals + 30 > max_evals) {
            std::ostringstream os;
            os << "integrate_1d: budget of " << max_evals
               << " evaluations exhausted; error " << toterr << " vs requested "
               << std::max(abs_tol, rel_tol * std::fabs(total));
            throw NonConvergenceError(os.str());
        }
        const double m = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, m);
        Segment right = gk15(f, m, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    return QuadratureResult{total, toterr, evals, Method::adaptive_1d};
}

QuadratureResult integrate_axis(const Fn1d& f, const Axis& axis,
                                double rel_tol, double abs_tol,
                                std::uint64_t max_evals) {
    if (axis.transform == Transform::linear)
        return integrate_1d(f, axis.lo, axis.hi, rel_tol, abs_tol, max_evals);
    if (axis.transform != Transform::algebraic && axis.transform != Transform::exponential)
        throw ValidationError("integrate_axis: deterministic rules accept linear, "
                              "algebraic or exponential transforms only");
    auto g = [&](double u) {
        double x, w;
        axis.map(u, x, w);
        return f(x) * w;
    };
    return integrate_1d(g, 0.0, 1.0, rel_tol, abs_tol, max_evals);
}

namespace {

QuadratureResult integrate_nd_impl(const FnNd& f, const Domain& d, double rel_tol,
                                   std::uint64_t max_evals, std::size_t level,
                                   double* coords, std::uint64_t& evals) {
    const Axis& axis = d.axes[level];
    const bool innermost = (level + 1 == d.dim());
    Fn1d g;
    if (innermost) {
        g = [&](double x) {
            coords[level] = x;
            ++evals;
            return f(coords);
        };
    } else {
        g = [&](double x) {
            coords[level] = x;
            return integrate_nd_impl(f, d, rel_tol * 0.5, max_evals, level + 1, coords, evals)
                .value;
        };
    }
    QuadratureResult r = integrate_axis(g, axis, rel_tol, 0.0, max_evals);
    return r;
}

} // namespace

QuadratureResult integrate_nd(const FnNd& f, const Domain& d, double rel_tol,
                              std::uint64_t max_evals_per_axis) {
    if (d.dim() < 1 || d.dim() > 3)
        throw ValidationError("integrate_nd: nested adaptive rules support dimensions 1-3; "
                              "use mc_integrate for higher dimensions");
    double coords[3] = {0, 0, 0};
    std::uint64_t evals = 0;
    QuadratureResult r = integrate_nd_impl(f, d, rel_tol, max_evals_per_axis, 0, coords, evals);
    r.evaluations = evals;
    r.method = d.dim() == 3 ? Method::nested_3d
              : d.dim() == 2 ? Method::nested_2d
                             : Method::adaptive_1d;
    return r;
}

namespace {

struct BlockStats {
    std::vector<double> sum;
    std::vector<double> sumsq; // of per-sample values, per component
    std::uint64_t n = 0;
};

} // namespace

std::vector<QuadratureResult> mc_integrate_multi(const FnMulti& f, std::size_t n_out,
                                                 const Domain& d, const McOptions& opts) {
    const std::size_t dim = d.dim();
    if (dim == 0) throw ValidationError("mc_integrate: empty domain");
    if (n_out == 0) throw ValidationError("mc_integrate: n_out must be >= 1");
    if (!opts.strata.empty() && opts.strata.size() != dim)
        throw ValidationError("mc_integrate: strata vector must match dimension");

    std::vector<std::uint32_t> strata(dim, 1);
    for (std::size_t i = 0; i < opts.strata.size(); ++i)
        strata[i] = std::max<std::uint32_t>(1, opts.strata[i]);
    std::uint64_t n_strata = 1;
    for (auto s : strata) n_strata *= s;
    if (n_strata > opts.sample_count)
        throw ValidationError("mc_integrate: more strata than samples");

    const std::uint64_t per_stratum = (opts.sample_count + n_strata - 1) / n_strata;

    // Blocks bound the work unit for threading; stream/counter indexing is
    // global per stratum so the split has no effect on any variate.
    const std::uint64_t block_size = 65536;
    struct BlockRef {
        std::uint64_t stratum;
        std::uint64_t first, count;
    };
    std::vector<BlockRef> blocks;
    for (std::uint64_t s = 0; s < n_strata; ++s)
        for (std::uint64_t first = 0; first < per_stratum; first += block_size)
            blocks.push_back({s, first, std::min(block_size, per_stratum - first)});

    std::vector<BlockStats> stats(blocks.size());
    std::vector<std::string> errors(blocks.size());

    parallel_for(blocks.size(), opts.threads, [&](std::size_t bi) {
        const BlockRef& blk = blocks[bi];
        BlockStats st;
        st.sum.assign(n_out, 0.0);
        st.sumsq.assign(n_out, 0.0);
        std::vector<std::uint64_t> cell(dim);
        {
            std::uint64_t rem = blk.stratum;
            for (std::size_t k = dim; k-- > 0;) {
                cell[k] = rem % strata[k];
                rem /= strata[k];
            }
        }
        std::vector<double> x(dim), out(n_out);
        try {
            for (std::uint64_t j = 0; j < blk.count; ++j) {
                const std::uint64_t sample = blk.first + j;
                double wtot = 1.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double u0 = uniform01(opts.seed, blk.stratum, sample * dim + k);
                    const double u = (static_cast<double>(cell[k]) + u0) / strata[k];
                    double xi, wi;
                    d.axes[k].map(u, xi, wi);
                    x[k] = xi;
                    wtot *= wi;
                }
                f(x.data(), out.data());
                for (std::size_t c = 0; c < n_out; ++c) {
                    const double v = out[c] * wtot;
                    if (std::isnan(v)) {
                        std::ostringstream os;
                        os << "mc_integrate: NaN sample at (";
                        for (std::size_t k = 0; k < dim; ++k)
                            os << x[k] << (k + 1 < dim ? ", " : ")");
                        throw NanSampleError(os.str());
                    }
                    st.sum[c] += v;
                    st.sumsq[c] += v * v;
                }
            }
            st.n = blk.count;
        } catch (const std::exception& e) {
            errors[bi] = e.what();
        }
        stats[bi] = std::move(st);
    });

    for (const auto& e : errors)
        if (!e.empty()) throw NanSampleError(e);

    // Combine per stratum in fixed order, then across strata.
    std::vector<QuadratureResult> results(n_out);
    std::vector<double> total(n_out, 0.0), var(n_out, 0.0);
    std::uint64_t evals = 0;
    std::size_t bi = 0;
    for (std::uint64_t s = 0; s < n_strata; ++s) {
        std::vector<double> ssum(n_out, 0.0), ssumsq(n_out, 0.0);
        std::uint64_t sn = 0;
        while (bi < blocks.size() && blocks[bi].stratum == s) {
            for (std::size_t c = 0; c < n_out; ++c) {
                ssum[c] += stats[bi].sum[c];
                ssumsq[c] += stats[bi].sumsq[c];
            }
            sn += stats[bi].n;
            ++bi;
        }
        evals += sn;
        const double vol = 1.0 / static_cast<double>(n_strata);
        for (std::size_t c = 0; c < n_out; ++c) {
            const double mean = ssum[c] / static_cast<double>(sn);
            total[c] += vol * mean;
            if (sn > 1) {
                // var(mean) = s^2/n with Bessel-corrected s^2
                const double var_mean =
                    std::max(0.0, ssumsq[c] / sn - mean * mean) / static_cast<double>(sn - 1);
                var[c] += vol * vol * var_mean;
            }
        }
    }
    for (std::size_t c = 0; c < n_out; ++c) {
        results[c].value = total[c];
        results[c].abs_error = std::sqrt(var[c]);
        results[c].evaluations = evals;
        results[c].method = Method::monte_carlo;
    }
    return results;
}

QuadratureResult mc_integrate(const FnNd& f, const Domain& d, const McOptions& opts) {
    FnMulti g = [&](const double* x, double* out) { out[0] = f(x); };
    return mc_integrate_multi(g, 1, d, opts)[0];
}

} // namespace scint::quad
