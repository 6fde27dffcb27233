#pragma once

#include <string>
#include <vector>

#include "germcalc/invariants.hpp"

namespace germcalc {

// Pretty-printed JSON object, two-space indent, trailing newline.
std::string report_to_json(const InvariantReport& report);
// JSON array of reports, same layout as the corpus golden files.
std::string reports_to_json(const std::vector<InvariantReport>& reports);

// Aligned two-column text rendering of the same fields.
std::string report_to_table(const InvariantReport& report);

}  // namespace germcalc
