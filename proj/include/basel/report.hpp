#pragma once

#include <string>
#include <string_view>

#include "basel/identities.hpp"

namespace basel {

enum class ReportFormat { json, table };

/// Throws std::invalid_argument for anything but "json" or "table".
ReportFormat parse_report_format(std::string_view name);

/// JSON numbers carry 17 significant digits; non-finite values print as null.
std::string render_report(const Report& report, ReportFormat format);

/// Inverse of the JSON rendering. Throws std::runtime_error on malformed
/// input or missing keys.
Report parse_report_json(std::string_view text);

}  // namespace basel
