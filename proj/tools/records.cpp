#include "records.hpp"

#include <cmath>

#include <json.hpp>

namespace catqi::cli {

namespace {

nlohmann::ordered_json to_json_value(const FieldValue& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

std::string to_text(const FieldValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return to_json_value(v).dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  return nlohmann::json(v).dump();
}

void write_records(std::ostream& out, const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::kJson:
      for (const auto& r : records) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& f : r) j[f.key] = to_json_value(f.value);
        out << j.dump() << '\n';
      }
      break;
    case Format::kCsv:
      if (records.empty()) break;
      for (std::size_t i = 0; i < records.front().size(); ++i) {
        out << (i ? "," : "") << records.front()[i].key;
      }
      out << '\n';
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(to_text(r[i].value));
        out << '\n';
      }
      break;
    case Format::kText:
      if (records.size() == 1) {
        for (const auto& f : records.front()) out << f.key << ": " << to_text(f.value) << '\n';
        break;
      }
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i].key << '=' << to_text(r[i].value);
        out << '\n';
      }
      break;
  }
}

}  // namespace catqi::cli
