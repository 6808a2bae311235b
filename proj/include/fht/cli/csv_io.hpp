#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fht::cli {

/// Two- or three-column sample table: header `x,value` or `x,value,reference`.
struct CsvTable {
  std::vector<double> x;
  std::vector<double> value;
  std::optional<std::vector<double>> reference;

  std::size_t rows() const noexcept { return x.size(); }
};

/// Shortest decimal form that reads back to the same double (17 significant
/// digits).
std::string format_double(double v);

/// Throws ParseError carrying the 1-based line number of the first bad line.
CsvTable parse_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Generic table with a caller-chosen header, same number format.
void write_columns(const std::filesystem::path& path,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns);

}  // namespace fht::cli
