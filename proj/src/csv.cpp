#include "pitshot/csv.hpp"

#include <charconv>
#include <system_error>

#include "pitshot/errors.hpp"

namespace pitshot::csv {

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string format_number(std::int64_t value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

CsvFile::CsvFile(const std::filesystem::path& path) : path_(path) {
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) {
    throw SimulationError("cannot open output file \"" + path.string() + "\"");
  }
}

void CsvFile::comment(const std::string& text) {
  out_ << "# " << text << '\n';
}

void CsvFile::header(const std::vector<std::string>& columns) {
  row(columns);
}

void CsvFile::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvFile::close() {
  out_.close();
  if (out_.fail()) {
    throw SimulationError("failed writing \"" + path_.string() + "\"");
  }
}

}  // namespace pitshot::csv
