#include "qcompile/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qcompile {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  if (header.empty()) throw std::invalid_argument("csv header must be non-empty");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += needs_quoting(header[i]) ? quoted(header[i]) : header[i];
  }
  out_ += '\n';
}

void CsvWriter::add_field(const std::string& value) {
  if (row_fields_ >= columns_) throw std::logic_error("csv row has too many fields");
  if (row_fields_) out_ += ',';
  out_ += needs_quoting(value) ? quoted(value) : value;
  ++row_fields_;
}

void CsvWriter::add_field(double value) { add_field(csv_format_double(value)); }

void CsvWriter::add_field(std::int64_t value) { add_field(std::to_string(value)); }

void CsvWriter::add_field(std::uint64_t value) { add_field(std::to_string(value)); }

void CsvWriter::end_row() {
  if (row_fields_ != columns_) throw std::logic_error("csv row has too few fields");
  out_ += '\n';
  row_fields_ = 0;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << out_;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace qcompile
