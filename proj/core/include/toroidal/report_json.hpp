#pragma once

#include <string>

#include "toroidal/classify.hpp"

namespace toroidal {

// Wire format of the report:
//   { "steps": [{"case_id", "rule", "citation", "verdict"}, ...],
//     "survivor": {"order", "slopes", "boundary_selfints",
//                  "c1bar_sq", "c2bar"} | null }
// Emission is deterministic (fixed key order); emit-then-parse returns an
// equal report.
std::string report_to_json_string(const ClassificationReport& report, int indent = 2);
ClassificationReport report_from_json_string(const std::string& text);

} // namespace toroidal
