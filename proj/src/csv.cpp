#include "scint/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace scint {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> sweep_csv_header() {
    return {"axis",
            "axis_value",
            "cn2",
            "z",
            "r0",
            "l0",
            "L0",
            "q0",
            "lambda_c",
            "sigma1_sq",
            "big_L",
            "i1_ratio",
            "x2_ratio",
            "x2_stderr",
            "sigma2_rytov_like",
            "sigma2_no_df2",
            "sigma2_full",
            "error_estimate",
            "within_rytov",
            "within_moderate",
            "time_hierarchy_ok",
            "x2_precision_flag",
            "row_seed",
            "status"};
}

std::string sweep_csv(const std::vector<SweepRow>& rows, SweepAxis axis) {
    std::ostringstream os;
    const auto header = sweep_csv_header();
    for (std::size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "\n");
    const double nan = std::nan("");
    for (const auto& row : rows) {
        const auto& p = row.params;
        const ScintResult* r = row.result ? &*row.result : nullptr;
        os << sweep_axis_name(axis) << ',' << format_double(row.axis_value) << ','
           << format_double(p.cn2) << ',' << format_double(p.z) << ',' << format_double(p.r0)
           << ',' << format_double(p.l0) << ',' << format_double(p.L0) << ','
           << format_double(p.q0) << ',' << format_double(p.lambda_c) << ','
           << format_double(r ? r->sigma1_sq : nan) << ',' << format_double(r ? r->big_L : nan)
           << ',' << format_double(r ? r->i1_ratio : nan) << ','
           << format_double(r ? r->x2_ratio : nan) << ','
           << format_double(r ? r->x2_stderr : nan) << ','
           << format_double(r ? r->sigma2_rytov_like : nan) << ','
           << format_double(r ? r->sigma2_no_df2 : nan) << ','
           << format_double(r ? r->sigma2_full : nan) << ','
           << format_double(r ? r->error_estimate : nan) << ','
           << (r ? (r->regime.within_rytov ? "1" : "0") : "") << ','
           << (r ? (r->regime.within_moderate ? "1" : "0") : "") << ','
           << (r ? (r->regime.time_hierarchy_ok ? "1" : "0") : "") << ','
           << (r ? (r->x2_precision_flag ? "1" : "0") : "") << ',' << row.row_seed << ',';
        if (row.error.empty()) {
            os << "ok";
        } else {
            std::string msg = row.error;
            for (auto& c : msg)
                if (c == ',' || c == '\n' || c == '\r') c = ';';
            os << msg;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace scint
