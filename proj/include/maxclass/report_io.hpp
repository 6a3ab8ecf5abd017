#pragma once

#include "maxclass/maps.hpp"

#include <string>

namespace maxclass {

enum class ReportFormat { text, machine };

// Machine format: one JSON object per report, no trailing newline.
std::string write_report(const SolveReport& report, ReportFormat format);
// Inverse of write_report(..., machine). Throws std::invalid_argument on malformed input.
SolveReport parse_report(const std::string& text);

}  // namespace maxclass
