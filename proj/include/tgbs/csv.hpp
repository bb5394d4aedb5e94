#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tgbs {

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view text);

/// Round-trippable decimal rendering of a double.
std::string format_real(double value);

/// `# schema: <schema>` followed by `# config: <json>` on one line.
void write_csv_preamble(std::ostream& out, std::string_view schema, const nlohmann::json& config);

}  // namespace tgbs
