#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toroidal/classify.hpp"

namespace toroidal::cli {

enum class OutputFormat { Text, Json };

// Renders the classification report.  Text mode lists the case tree in the
// order the engine walked it (Kodaira dimension eliminations first, then
// the minimal-model branch); JSON mode follows the published schema and
// round-trips through report_from_json_string.
std::string emit_report(const ClassificationReport& report, OutputFormat format);

// Dispatches the subcommand named in args (without the program name).
// Exit code 0 on success, 1 on a domain error (bad element, mismatched
// orders, unwritable output path), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace toroidal::cli
