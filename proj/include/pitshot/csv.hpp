#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace pitshot::csv {

/// Locale-independent number formatting: shortest of 9 significant digits,
/// '.' decimal separator. All CSV output goes through this so reruns are
/// byte-identical.
std::string format_number(double value);
std::string format_number(std::int64_t value);

/// CSV with '#' comment lines, one header line, '\n' endings.
class CsvFile {
 public:
  explicit CsvFile(const std::filesystem::path& path);

  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

  void close();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

}  // namespace pitshot::csv
