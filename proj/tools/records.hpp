#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace catqi::cli {

enum class Format { kJson, kCsv, kText };

using FieldValue = std::variant<std::string, double, std::int64_t, bool>;

struct Field {
  std::string key;
  FieldValue value;
};

/// One output row. All three formats print numbers through the same
/// formatter, so the numeric payload is textually identical across them.
using Record = std::vector<Field>;

std::string format_number(double v);

/// JSON: one object per line. CSV: header from the first record, then one
/// line per record. Text: "key: value" lines for a single record, or
/// space-separated "key=value" rows for several.
void write_records(std::ostream& out, const std::vector<Record>& records, Format format);

}  // namespace catqi::cli
