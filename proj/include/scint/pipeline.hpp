#ifndef SCINT_PIPELINE_HPP
#define SCINT_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scint/cross_term.hpp"
#include "scint/first_order.hpp"
#include "scint/intensity_correction.hpp"
#include "scint/phys_params.hpp"

namespace scint {

class Cache;

/// Assembled scintillation index and every audited sub-result:
///   sigma2_full       = (sigma1^2 L + x2) / (1 + i1)^2
///   sigma2_no_df2     =  sigma1^2 L       / (1 + i1)^2
///   sigma2_rytov_like =  sigma1^2 L
struct ScintResult {
    double sigma2_full = 0.0;
    double sigma2_no_df2 = 0.0;
    double sigma2_rytov_like = 0.0;
    double i1_ratio = 0.0;
    double x2_ratio = 0.0;
    double sigma1_sq = 0.0;
    double big_L = 0.0;
    double error_estimate = 0.0; ///< combined first-order/i1/x2 propagation
    double x2_stderr = 0.0;
    bool x2_precision_flag = false;
    RegimeReport regime;
    std::uint64_t evaluations = 0; ///< fresh integrand evaluations (0 on warm cache)
};

struct PipelineOptions {
    double rel_tol = 1e-6;
    std::uint64_t mc_samples = 200'000;
    std::uint64_t seed = 12345;
    int threads = 1;
    Cache* cache = nullptr; ///< optional on-disk result cache
};

ScintResult scintillation_index(const PhysicalParams& p, const PipelineOptions& opts);

enum class SweepAxis { z, cn2, sigma1_sq };

const char* sweep_axis_name(SweepAxis a);

/// One sweep point: the swept value, the flattened result, and an error
/// message when this row failed (other rows are unaffected).
struct SweepRow {
    double axis_value = 0.0;
    PhysicalParams params;      ///< row parameters after applying the axis
    std::optional<ScintResult> result;
    std::string error;          ///< empty on success; names the failed stage
    std::uint64_t row_seed = 0;
};

/// Evaluate the pipeline over a strictly increasing grid of the chosen axis.
/// Rows run concurrently; per-row seeds are derived from (seed, index) so
/// neighbouring rows decorrelate and results are thread-count independent.
std::vector<SweepRow> sweep(const PhysicalParams& base, SweepAxis axis,
                            const std::vector<double>& grid, const PipelineOptions& opts);

} // namespace scint

#endif
