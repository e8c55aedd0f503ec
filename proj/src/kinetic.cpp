#include "scint/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "scint/errors.hpp"
#include "scint/util.hpp"

namespace scint {

namespace {

// 64-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
            const double dx = p0 / pp;
            xi -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        x[i] = -xi;
        x[n - 1 - i] = xi;
        w[i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

void check_support(const PdfGrid& g) {
    const double m = g.max_abs();
    if (m == 0.0) return;
    if (g.boundary_max_abs() > 1e-12 * m)
        throw BoundaryLeakageError(
            "apply_collision: distribution does not vanish at the grid edge");
}

} // namespace

PdfGrid PdfGrid::make(int nx, int ny, double qx_max, double qy_max,
                      const std::function<double(double, double)>& f) {
    if (nx < 2 || ny < 2) throw ValidationError("PdfGrid: need at least 2x2 nodes");
    PdfGrid g;
    g.nx = nx;
    g.ny = ny;
    g.qx_max = qx_max;
    g.qy_max = qy_max;
    g.values.resize(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) g.at(i, j) = f(g.qx(i), g.qy(j));
    return g;
}

double PdfGrid::interpolate(double x, double y) const {
    const double fx = (x + qx_max) / dqx();
    const double fy = (y + qy_max) / dqy();
    if (fx < 0.0 || fy < 0.0 || fx > nx - 1 || fy > ny - 1) return 0.0;
    int i = static_cast<int>(fx);
    int j = static_cast<int>(fy);
    i = std::min(i, nx - 2);
    j = std::min(j, ny - 2);
    const double ax = fx - i, ay = fy - j;
    return (1 - ax) * (1 - ay) * at(i, j) + ax * (1 - ay) * at(i + 1, j) +
           (1 - ax) * ay * at(i, j + 1) + ax * ay * at(i + 1, j + 1);
}

double PdfGrid::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

double PdfGrid::boundary_max_abs() const {
    double m = 0.0;
    for (int i = 0; i < nx; ++i) {
        m = std::max(m, std::fabs(at(i, 0)));
        m = std::max(m, std::fabs(at(i, ny - 1)));
    }
    for (int j = 0; j < ny; ++j) {
        m = std::max(m, std::fabs(at(0, j)));
        m = std::max(m, std::fabs(at(nx - 1, j)));
    }
    return m;
}

double PdfGrid::grid_sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

void PdfGrid::write_csv(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "x_index,y_index,value\n";
    char buf[64];
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", i, j, at(i, j));
            os << buf;
        }
}

std::vector<AnnulusNode> collision_annulus(const SpectrumParams& s, double L0, int n_radial,
                                           int n_angular) {
    const double k_inner = 2.0 * M_PI / s.l0;
    const double L0_eff = std::min(std::isinf(L0) ? 100.0 * s.l0 : L0, 100.0 * s.l0);
    const double kmin = 2.0 * M_PI / L0_eff;
    const double kmax = 4.0 * M_PI * k_inner;
    std::vector<double> gx, gw;
    gauss_legendre(n_radial, gx, gw);
    const double la = std::log(kmin), lb = std::log(kmax);
    std::vector<AnnulusNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
    const double dphi = 2.0 * M_PI / n_angular;
    for (int r = 0; r < n_radial; ++r) {
        const double lk = 0.5 * (la + lb) + 0.5 * (lb - la) * gx[r];
        const double k = std::exp(lk);
        const double wr = 0.5 * (lb - la) * gw[r] * k * k * psi(k, s); // d2k' = k^2 dlogk dphi
        for (int a = 0; a < n_angular; ++a) {
            const double phi = (a + 0.5) * dphi;
            nodes.push_back({k * std::cos(phi), k * std::sin(phi), wr * dphi});
        }
    }
    return nodes;
}

PdfGrid apply_collision(const PdfGrid& g, const SpectrumParams& s, double omega0, double L0,
                        bool enforce_support, int threads) {
    if (enforce_support) check_support(g);
    const auto nodes = collision_annulus(s, L0);
    const double pref = -2.0 * M_PI * omega0 * omega0 / kSpeedOfLight;
    PdfGrid out = g;
    parallel_for(static_cast<std::size_t>(g.ny), threads, [&](std::size_t j) {
        for (int i = 0; i < g.nx; ++i) {
            const double f0 = g.at(i, static_cast<int>(j));
            const double x = g.qx(i), y = g.qy(static_cast<int>(j));
            double acc = 0.0;
            for (const auto& n : nodes) acc += n.weight * (f0 - g.interpolate(x + n.kx, y + n.ky));
            out.at(i, static_cast<int>(j)) = pref * acc;
        }
    });
    return out;
}

PdfGrid apply_diffusion(const PdfGrid& g, const SpectrumParams& s, double omega0, double L0,
                        bool enforce_support, int threads) {
    if (enforce_support) check_support(g);
    const auto nodes = collision_annulus(s, L0);
    double m2 = 0.0; // Int d2k' psi(k') k'^2 over the same annulus
    for (const auto& n : nodes) m2 += n.weight * (n.kx * n.kx + n.ky * n.ky);
    const double pref = M_PI * omega0 * omega0 / (2.0 * kSpeedOfLight) * m2;
    PdfGrid out = g;
    const double ihx2 = 1.0 / (g.dqx() * g.dqx());
    const double ihy2 = 1.0 / (g.dqy() * g.dqy());
    parallel_for(static_cast<std::size_t>(g.ny), threads, [&](std::size_t jj) {
        const int j = static_cast<int>(jj);
        for (int i = 0; i < g.nx; ++i) {
            auto v = [&](int a, int b) {
                return (a < 0 || b < 0 || a >= g.nx || b >= g.ny) ? 0.0 : g.at(a, b);
            };
            const double lap = (v(i - 1, j) - 2.0 * v(i, j) + v(i + 1, j)) * ihx2 +
                               (v(i, j - 1) - 2.0 * v(i, j) + v(i, j + 1)) * ihy2;
            out.at(i, j) = pref * lap;
        }
    });
    return out;
}

} // namespace scint
