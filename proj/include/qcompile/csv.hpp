#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcompile {

/// Minimal RFC-4180 CSV writer: comma separator, LF line endings, quoting
/// only when a field contains a comma, quote, or newline. Numeric fields are
/// formatted with %.17g so outputs are byte-stable and round-trip exactly.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_field(const std::string& value);
  void add_field(double value);
  void add_field(std::int64_t value);
  void add_field(int value) { add_field(static_cast<std::int64_t>(value)); }
  void add_field(std::uint64_t value);
  void end_row();

  const std::string& str() const { return out_; }
  void write_file(const std::string& path) const;

 private:
  std::string out_;
  std::size_t columns_ = 0;
  std::size_t row_fields_ = 0;
};

std::string csv_format_double(double value);

}  // namespace qcompile
