#ifndef SCINT_CSV_HPP
#define SCINT_CSV_HPP

#include <string>
#include <vector>

#include "scint/pipeline.hpp"

namespace scint {

/// %.17g: doubles round-trip to the identical bit pattern.
std::string format_double(double v);

/// Column order of the sweep CSV; the header row names every SweepRow field.
std::vector<std::string> sweep_csv_header();

/// One CSV line per row, LF endings, "." decimal separator. Failed rows emit
/// nan numeric fields and a sanitized status message.
std::string sweep_csv(const std::vector<SweepRow>& rows, SweepAxis axis);

} // namespace scint

#endif
