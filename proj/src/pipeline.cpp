#include "scint/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "scint/cache.hpp"
#include "scint/errors.hpp"
#include "scint/rng.hpp"
#include "scint/util.hpp"

namespace scint {

namespace {

nlohmann::json params_key(const PhysicalParams& p) {
    return {{"cn2", p.cn2}, {"l0", p.l0},
            {"L0", std::isinf(p.L0) ? -1.0 : p.L0},
            {"q0", p.q0},   {"z", p.z},
            {"r0", p.r0},
            {"lambda_c", std::isinf(p.lambda_c) ? -1.0 : p.lambda_c},
            {"version", std::string(kCodeVersion)}};
}

nlohmann::json quad_to_json(const quad::QuadratureResult& q) {
    return {{"value", q.value},
            {"abs_error", q.abs_error},
            {"evaluations", q.evaluations},
            {"method", quad::method_name(q.method)}};
}

template <class Fn>
auto run_stage(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << stage << ": " << e.what();
        throw std::runtime_error(os.str());
    }
}

} // namespace

ScintResult scintillation_index(const PhysicalParams& p, const PipelineOptions& opts) {
    p.validate();
    const DerivedParams d = derive_params(p);

    ScintResult out;
    out.sigma1_sq = d.sigma1_sq;
    out.regime = validate_regime(d, p);

    // First-order factor L
    double errL = 0.0;
    std::uint64_t fresh = 0;
    {
        auto compute = [&] {
            const FirstOrderResult r = run_stage("first-order", [&] {
                return sigma2_first_order(d, p, opts.rel_tol);
            });
            fresh += r.quadrature.evaluations;
            return nlohmann::json{{"big_L", r.big_L}, {"quad", quad_to_json(r.quadrature)}};
        };
        nlohmann::json j;
        if (opts.cache) {
            nlohmann::json key = params_key(p);
            key["module"] = "first-order";
            key["rel_tol"] = opts.rel_tol;
            j = opts.cache->get_or_compute(key, compute);
        } else {
            j = compute();
        }
        out.big_L = j.at("big_L").get<double>();
        errL = j.at("quad").at("abs_error").get<double>();
    }

    // Mean-intensity correction
    double errI1 = 0.0;
    {
        auto compute = [&] {
            const IntensityCorrection r = run_stage("intensity-correction", [&] {
                return intensity_correction_ratio(d, p, opts.rel_tol);
            });
            fresh += r.quadrature.evaluations;
            return nlohmann::json{{"i1", r.i1_ratio}, {"quad", quad_to_json(r.quadrature)}};
        };
        nlohmann::json j;
        if (opts.cache) {
            nlohmann::json key = params_key(p);
            key["module"] = "intensity-correction";
            key["rel_tol"] = opts.rel_tol;
            j = opts.cache->get_or_compute(key, compute);
        } else {
            j = compute();
        }
        out.i1_ratio = j.at("i1").get<double>();
        errI1 = j.at("quad").at("abs_error").get<double>();
    }

    // Cross term
    {
        auto compute = [&] {
            quad::McOptions mc;
            mc.sample_count = opts.mc_samples;
            mc.seed = opts.seed;
            mc.threads = opts.threads;
            mc.importance = "power-law-radial";
            const CrossTermResult r = run_stage("cross-term", [&] {
                return cross_term_ratio(d, p, mc);
            });
            fresh += r.quadrature.evaluations;
            return nlohmann::json{{"x2", r.x2_ratio},
                                  {"stderr", r.quadrature.abs_error},
                                  {"precision_flag", r.precision_flag},
                                  {"im_part", r.im_part},
                                  {"quad", quad_to_json(r.quadrature)}};
        };
        nlohmann::json j;
        if (opts.cache) {
            nlohmann::json key = params_key(p);
            key["module"] = "cross-term";
            key["mc_samples"] = opts.mc_samples;
            key["seed"] = opts.seed;
            j = opts.cache->get_or_compute(key, compute);
        } else {
            j = compute();
        }
        out.x2_ratio = j.at("x2").get<double>();
        out.x2_stderr = j.at("stderr").get<double>();
        out.x2_precision_flag = j.at("precision_flag").get<bool>();
    }

    const double depletion = 1.0 + out.i1_ratio;
    if (!(depletion > 0.0))
        throw InternalConsistencyError(
            "scintillation_index: 1 + i1 <= 0; outside the validity of the iteration");
    const double numerator = d.sigma1_sq * out.big_L + out.x2_ratio;
    out.sigma2_rytov_like = d.sigma1_sq * out.big_L;
    out.sigma2_no_df2 = out.sigma2_rytov_like / (depletion * depletion);
    out.sigma2_full = numerator / (depletion * depletion);
    out.evaluations = fresh;

    const double d2 = depletion * depletion;
    const double e1 = d.sigma1_sq * errL / d2;
    const double e2 = out.x2_stderr / d2;
    const double e3 = 2.0 * std::fabs(numerator) * errI1 / (d2 * depletion);
    out.error_estimate = std::sqrt(e1 * e1 + e2 * e2 + e3 * e3);
    return out;
}

const char* sweep_axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::z: return "z";
        case SweepAxis::cn2: return "cn2";
        case SweepAxis::sigma1_sq: return "sigma1_sq";
    }
    return "unknown";
}

std::vector<SweepRow> sweep(const PhysicalParams& base, SweepAxis axis,
                            const std::vector<double>& grid, const PipelineOptions& opts) {
    if (grid.empty()) throw ValidationError("sweep: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ValidationError("sweep: grid must be strictly increasing");

    std::vector<SweepRow> rows(grid.size());
    parallel_for(grid.size(), opts.threads, [&](std::size_t i) {
        SweepRow row;
        row.axis_value = grid[i];
        row.params = base;
        switch (axis) {
            case SweepAxis::z: row.params.z = grid[i]; break;
            case SweepAxis::cn2: row.params.cn2 = grid[i]; break;
            case SweepAxis::sigma1_sq:
                // invert the Rytov variance at fixed geometry
                row.params.cn2 = grid[i] / (1.23 * std::pow(base.q0, 7.0 / 6.0) *
                                            std::pow(base.z, 11.0 / 6.0));
                break;
        }
        row.row_seed = opts.seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1);
        PipelineOptions row_opts = opts;
        row_opts.seed = row.row_seed;
        row_opts.threads = 1; // rows already run concurrently
        try {
            row.result = scintillation_index(row.params, row_opts);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows[i] = std::move(row);
    });
    return rows;
}

} // namespace scint
