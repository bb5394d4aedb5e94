#include "tgbs/csv.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace tgbs {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_real(double value) {
  std::ostringstream s;
  s.precision(std::numeric_limits<double>::max_digits10);
  s << value;
  return s.str();
}

void write_csv_preamble(std::ostream& out, std::string_view schema, const nlohmann::json& config) {
  out << "# schema: " << schema << '\n';
  out << "# config: " << config.dump() << '\n';
}

}  // namespace tgbs
